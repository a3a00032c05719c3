#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "arcgraph/kernels.hpp"
#include "arcgraph/perm.hpp"

using namespace arcgraph;

namespace {

std::vector<std::uint32_t> random_perm(std::size_t n, std::mt19937 &rng) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0U);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

} // namespace

TEST_CASE("compose variants agree with the scalar reference") {
  std::mt19937 rng(12345);
  for (std::size_t n : {0U, 1U, 7U, 8U, 9U, 31U, 64U, 333U, 4099U}) {
    auto a = random_perm(n, rng);
    auto b = random_perm(n, rng);
    std::vector<std::uint32_t> ref(n), got(n);
    kernels::scalar::compose(a, b, ref);
    for (std::size_t i = 0; i < n; ++i)
      REQUIRE(ref[i] == b[a[i]]);
#ifdef ARCGRAPH_HAVE_AVX2_KERNELS
    if (kernels::detected_isa() == kernels::Isa::Avx2) {
      kernels::avx2::compose(a, b, got);
      CHECK(got == ref);
    }
#endif
  }
}

TEST_CASE("is_identity variants agree") {
  std::mt19937 rng(7);
  for (std::size_t n : {0U, 5U, 8U, 17U, 100U}) {
    std::vector<std::uint32_t> id(n);
    std::iota(id.begin(), id.end(), 0U);
    CHECK(kernels::scalar::is_identity(id));
    if (n >= 2) {
      auto moved = id;
      std::swap(moved[n - 2], moved[n - 1]);
      CHECK_FALSE(kernels::scalar::is_identity(moved));
#ifdef ARCGRAPH_HAVE_AVX2_KERNELS
      if (kernels::detected_isa() == kernels::Isa::Avx2) {
        CHECK(kernels::avx2::is_identity(id));
        CHECK_FALSE(kernels::avx2::is_identity(moved));
      }
#endif
    }
  }
}

TEST_CASE("group orders do not depend on the selected kernel") {
  auto run = [] {
    PermGroup s6(6, {Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}}),
                     Permutation::from_cycles(6, {{0, 1}})});
    return s6.order();
  };
  kernels::Isa before = kernels::active_isa();
  kernels::select_isa(kernels::Isa::Scalar);
  auto scalar_order = run();
  kernels::select_isa(kernels::Isa::Avx2);
  auto wide_order = run();
  kernels::select_isa(before);
  CHECK(scalar_order == 720);
  CHECK(wide_order == 720);
}

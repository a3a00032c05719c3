#include "doctest.h"

#include "arcgraph/analyze.hpp"
#include "arcgraph/cover.hpp"
#include "arcgraph/error.hpp"
#include "oracles/graph_oracles.hpp"
#include "oracles/group_oracles.hpp"

using namespace arcgraph;

namespace {

ErrorCode code_of(auto &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

fp::MarkedGroup witness(int k, std::size_t i = 0) {
  auto f = fp::feasibility(k);
  REQUIRE(f.witnesses.size() > i);
  return f.witnesses[i];
}

fp::MarkedGroup a4_marked() {
  for (auto &m : fp::enumerate_arc_regular_quotients(4, 3))
    return m;
  FAIL("no quotient of order 12");
  return {};
}

} // namespace

TEST_CASE("modular helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(1009));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(2, 13) == 12);
  CHECK(roots_of_unity(3, 7) == std::vector<std::uint64_t>{2, 4});
  CHECK(roots_of_unity(3, 13) == std::vector<std::uint64_t>{3, 9});
  CHECK(roots_of_unity(3, 11).empty());
}

TEST_CASE("character chi") {
  auto c6 = witness(2);
  CHECK(c6.group.order() == 6);
  auto chi = character_chi(c6, 7, 2);
  PermGroupOracle g(c6.group);
  CHECK(chi.table[g.index_of(c6.a)] == 6);
  CHECK(chi.table[g.index_of(c6.h)] == 2);
  CHECK(chi.table[g.index_of(c6.a * c6.h)] == 5);
  CHECK(chi.table[g.identity()] == 1);

  auto f42 = witness(14);
  auto chi42 = character_chi(f42, 13, 3);
  PermGroupOracle g42(f42.group);
  CHECK(chi42.table[g42.index_of(f42.a)] == 12);
  CHECK(chi42.table[g42.index_of(f42.h)] == 3);

  CHECK(code_of([&] { character_chi(c6, 13, 2); }) == ErrorCode::InvalidZeta);
  CHECK(code_of([&] { character_chi(a4_marked(), 7, 2); }) ==
        ErrorCode::AbelianizationMismatch);
  CHECK(code_of([&] { character_chi(c6, 15, 2); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { character_chi(c6, 11, 3); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("semidirect product") {
  auto c6 = witness(2);
  auto g = build_semidirect({c6, 7, 2});
  CHECK(g.size() == 42);
  check_group_axioms(g);
  CHECK(subgroup_closure(g, g.generators()).size() == 42);
  // z^a = z^-1 and z^h = z^zeta.
  auto conj = [&](std::size_t x, std::size_t by) {
    return g.multiply(g.multiply(g.inverse(by), x), by);
  };
  CHECK(conj(g.z(), g.a()) == g.inverse(g.z()));
  std::size_t z2 = g.multiply(g.z(), g.z());
  CHECK(conj(g.z(), g.h()) == z2);
  for (std::size_t x = 0; x < g.size(); ++x)
    CHECK(g.multiply(x, g.inverse(x)) == g.identity());
  // P = {(e, 1)} is normal of order p.
  std::vector<std::size_t> zs{g.z()};
  auto pset = subgroup_closure(g, zs);
  CHECK(pset.size() == 7);
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y : pset)
      CHECK(std::binary_search(pset.begin(), pset.end(), conj(y, x)));

  // Isomorphic to the order-42 quotients of the modular group with k = 14.
  PermGroupOracle frob(witness(14).group);
  CHECK(oracle::isomorphic_groups(g, frob));

  auto big = build_semidirect({witness(14), 13, 3});
  CHECK(big.size() == 546);
  check_group_axioms(big);
}

TEST_CASE("heawood as a cover of the dipole") {
  auto c6 = witness(2);
  Graph g = build_cover({c6, 7, 2});
  CHECK(g.order() == 14);
  CHECK(g.size() == 21);
  Graph heawood = lcf_parse("[5,-5]^7");
  CHECK(isomorphic(g, heawood));
  CHECK(oracle::brute_isomorphic(g, heawood));
  // Every generator of P gives the same graph.
  std::string cert = canonical_form(g).certificate;
  for (std::uint64_t t = 2; t < 7; ++t)
    CHECK(canonical_form(build_cover_full({c6, 7, 2}, t).graph).certificate == cert);
}

TEST_CASE("order 2p covers") {
  auto covers = enumerate_covers(2, 13);
  REQUIRE(covers.size() == 1);
  const Graph &g = covers[0].graph;
  CHECK(g.order() == 26);
  CHECK(oracle::brute_automorphism_count(g) == 78);
  auto prof = s_arc_profile(g);
  CHECK(prof.group_order == 78);
  CHECK(prof.s_regular() == 1);
  auto c6 = witness(2);
  CHECK(isomorphic(build_cover({c6, 13, 3}), build_cover({c6, 13, 9})));
  CHECK(has_inverting_automorphism(c6));
}

TEST_CASE("covers of K33 and Heawood bases") {
  auto six = enumerate_covers(6, 7);
  REQUIRE(six.size() == 1);
  CHECK(six[0].graph.order() == 42);
  CHECK(oracle::brute_automorphism_count(six[0].graph) == 126);
  CHECK(s_arc_profile(six[0].graph).s_regular() == 1);

  auto fourteen = enumerate_covers(14, 13);
  REQUIRE(fourteen.size() == 2);
  CHECK(fourteen[0].certificate != fourteen[1].certificate);
  CHECK_FALSE(oracle::brute_isomorphic(fourteen[0].graph, fourteen[1].graph));
  for (const auto &c : fourteen) {
    CHECK(c.graph.order() == 182);
    auto prof = s_arc_profile(c.graph);
    CHECK(prof.group_order == 546);
    CHECK(prof.s_regular() == 1);
  }
  CHECK(oracle::brute_automorphism_count(fourteen[0].graph) == 546);

  CHECK(enumerate_covers(4, 193).empty());
  CHECK(code_of([] { enumerate_covers(4, 11); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { enumerate_covers(7, 7); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("inverting automorphisms") {
  CHECK(has_inverting_automorphism(witness(2)));
  for (auto &m : fp::enumerate_arc_regular_quotients(14, 3))
    CHECK_FALSE(has_inverting_automorphism(m));
  for (auto &m : fp::enumerate_arc_regular_quotients(6, 3))
    if (m.group.order() == 18)
      CHECK(has_inverting_automorphism(m));
  CHECK(has_inverting_automorphism(a4_marked()));

  // Inverting bases give the same cover for zeta and zeta^-1.
  for (int k : {2, 6, 8, 14}) {
    for (auto &m : fp::feasibility(k).witnesses) {
      if (!has_inverting_automorphism(m))
        continue;
      for (std::uint64_t p : {7, 13, 19}) {
        if ((3 * static_cast<std::uint64_t>(k)) % p == 0)
          continue;
        auto z = roots_of_unity(3, p);
        CAPTURE(k);
        CAPTURE(p);
        CHECK(isomorphic(build_cover({m, p, z[0]}), build_cover({m, p, z[1]})));
      }
    }
  }
}

TEST_CASE("cover counts per base") {
  for (int k = 2; k <= 14; k += 2)
    for (auto &m : fp::feasibility(k).witnesses)
      for (std::uint64_t p : {7, 13, 19, 31}) {
        if ((3 * static_cast<std::uint64_t>(k)) % p == 0)
          continue;
        CAPTURE(k);
        CAPTURE(p);
        auto c = covers_of_base(m, p);
        CHECK(c.size() >= 1);
        CHECK(c.size() <= 2);
      }
}

TEST_CASE("structure reports") {
  struct Case {
    int k;
    std::uint64_t p;
    std::uint64_t j;
  };
  for (Case cs : {Case{2, 13, 1}, Case{6, 7, 3}, Case{14, 13, 7}, Case{8, 7, 4}}) {
    for (auto &m : fp::feasibility(cs.k).witnesses)
      for (std::uint64_t zeta : roots_of_unity(3, cs.p)) {
        CAPTURE(cs.k);
        CAPTURE(zeta);
        CoverSpec spec{m, cs.p, zeta};
        auto g = build_semidirect(spec);
        Graph gr = build_cover(spec);
        auto r = structure_report(g, gr);
        CHECK(r.ok(3));
        CHECK(r.abelianization == std::vector<std::uint64_t>{6});
        CHECK(g.size() / oracle::derived_order(g) == 6);
        CHECK(r.p_mod_2d == 1);
        CHECK(r.centralizer_complement_order == cs.j);
        std::uint64_t kernel = std::count(g.chi().table.begin(), g.chi().table.end(), 1u);
        CHECK(r.centralizer_complement_order == kernel);
        CHECK(r.centralizer_order == kernel * cs.p);
      }
  }
  auto c6 = witness(2);
  auto g = build_semidirect({c6, 7, 2});
  auto r = structure_report(g, lcf_parse("[5,-5]^7"));
  CHECK_FALSE(r.sylow_p_normal);
}

#include "arcgraph/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace arcgraph::kernels {

namespace {

Isa probe() {
#ifdef ARCGRAPH_HAVE_AVX2_KERNELS
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2"))
    return Isa::Avx2;
#endif
  return Isa::Scalar;
}

Isa initial_isa() {
  // ARCGRAPH_ISA=scalar pins the reference kernels for a whole process.
  if (const char *env = std::getenv("ARCGRAPH_ISA");
      env != nullptr && std::strcmp(env, "scalar") == 0)
    return Isa::Scalar;
  return probe();
}

std::atomic<Isa> &current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

} // namespace

Isa detected_isa() {
  static const Isa isa = probe();
  return isa;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

Isa select_isa(Isa isa) {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2)
    isa = Isa::Scalar;
  current().store(isa, std::memory_order_relaxed);
  return isa;
}

const char *isa_name(Isa isa) {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

void compose(std::span<const std::uint32_t> first,
             std::span<const std::uint32_t> second,
             std::span<std::uint32_t> out) {
#ifdef ARCGRAPH_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::Avx2)
    return avx2::compose(first, second, out);
#endif
  scalar::compose(first, second, out);
}

bool is_identity(std::span<const std::uint32_t> img) {
#ifdef ARCGRAPH_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::Avx2)
    return avx2::is_identity(img);
#endif
  return scalar::is_identity(img);
}

} // namespace arcgraph::kernels

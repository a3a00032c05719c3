#pragma once

// Data-parallel permutation kernels. Every kernel has a scalar reference
// implementation; wider variants are selected once at startup from the CPU
// feature flags and must produce bit-identical output.

#include <cstdint>
#include <span>

namespace arcgraph::kernels {

enum class Isa { Scalar, Avx2 };

/// out[i] = second[first[i]]  (apply `first`, then `second`).
void compose(std::span<const std::uint32_t> first,
             std::span<const std::uint32_t> second,
             std::span<std::uint32_t> out);

/// True iff img[i] == i for all i.
bool is_identity(std::span<const std::uint32_t> img);

/// Instruction set used by the dispatching entry points.
Isa active_isa();

/// Best instruction set this CPU supports.
Isa detected_isa();

/// Force a particular variant (tests use this to compare variants). Requesting
/// an unsupported ISA falls back to Scalar. Returns the ISA actually selected.
Isa select_isa(Isa isa);

const char *isa_name(Isa isa);

namespace scalar {
void compose(std::span<const std::uint32_t> first,
             std::span<const std::uint32_t> second,
             std::span<std::uint32_t> out);
bool is_identity(std::span<const std::uint32_t> img);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define ARCGRAPH_HAVE_AVX2_KERNELS 1
namespace avx2 {
void compose(std::span<const std::uint32_t> first,
             std::span<const std::uint32_t> second,
             std::span<std::uint32_t> out);
bool is_identity(std::span<const std::uint32_t> img);
} // namespace avx2
#endif

} // namespace arcgraph::kernels

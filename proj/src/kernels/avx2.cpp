#include "arcgraph/kernels.hpp"

#ifdef ARCGRAPH_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <cstddef>

namespace arcgraph::kernels::avx2 {

__attribute__((target("avx2")))
void compose(std::span<const std::uint32_t> first,
             std::span<const std::uint32_t> second,
             std::span<std::uint32_t> out) {
  const std::size_t n = first.size();
  const auto *base = reinterpret_cast<const int *>(second.data());
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i idx = _mm256_loadu_si256(
        reinterpret_cast<const __m256i *>(first.data() + i));
    __m256i v = _mm256_i32gather_epi32(base, idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(out.data() + i), v);
  }
  for (; i < n; ++i)
    out[i] = second[first[i]];
}

__attribute__((target("avx2")))
bool is_identity(std::span<const std::uint32_t> img) {
  const std::size_t n = img.size();
  std::size_t i = 0;
  __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i step = _mm256_set1_epi32(8);
  for (; i + 8 <= n; i += 8) {
    __m256i v =
        _mm256_loadu_si256(reinterpret_cast<const __m256i *>(img.data() + i));
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi32(v, iota)) != -1)
      return false;
    iota = _mm256_add_epi32(iota, step);
  }
  for (; i < n; ++i)
    if (img[i] != i)
      return false;
  return true;
}

} // namespace arcgraph::kernels::avx2

#endif

#include "arcgraph/kernels.hpp"

#include <cstddef>

namespace arcgraph::kernels::scalar {

void compose(std::span<const std::uint32_t> first,
             std::span<const std::uint32_t> second,
             std::span<std::uint32_t> out) {
  const std::size_t n = first.size();
  for (std::size_t i = 0; i < n; ++i)
    out[i] = second[first[i]];
}

bool is_identity(std::span<const std::uint32_t> img) {
  const std::size_t n = img.size();
  for (std::size_t i = 0; i < n; ++i)
    if (img[i] != i)
      return false;
  return true;
}

} // namespace arcgraph::kernels::scalar

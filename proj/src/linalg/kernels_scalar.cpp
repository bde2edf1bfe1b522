#include "trigor/linalg/kernels.hpp"

namespace trigor::kernels::scalar {

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t n) {
  const std::uint64_t ff = f;
  for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<std::uint32_t>((dst[i] + ff * src[i]) % p);
}

void scale_mod(std::uint32_t* dst, std::uint32_t f, std::uint32_t p, std::size_t n) {
  const std::uint64_t ff = f;
  for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<std::uint32_t>((ff * dst[i]) % p);
}

}  // namespace trigor::kernels::scalar

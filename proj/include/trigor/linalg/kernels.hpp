#pragma once

#include <cstddef>
#include <cstdint>

// Row kernels for dense F_p elimination. Entries are reduced residues (< p).
namespace trigor::kernels {

enum class Isa { Scalar, Avx2 };

// dst[i] = (dst[i] + f * src[i]) mod p
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t n);
// dst[i] = f * dst[i] mod p
void scale_mod(std::uint32_t* dst, std::uint32_t f, std::uint32_t p, std::size_t n);

Isa active_isa();
bool avx2_supported();
// Test hook; TRIGOR_FORCE_SCALAR=1 in the environment has the same effect at startup.
void set_isa(Isa isa);
const char* isa_name(Isa isa);

namespace scalar {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t n);
void scale_mod(std::uint32_t* dst, std::uint32_t f, std::uint32_t p, std::size_t n);
}  // namespace scalar

namespace avx2 {
// Vector path handles p < 2^15; larger moduli fall through to the scalar loop.
constexpr std::uint32_t kMaxModulus = 1u << 15;
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t n);
void scale_mod(std::uint32_t* dst, std::uint32_t f, std::uint32_t p, std::size_t n);
}  // namespace avx2

}  // namespace trigor::kernels

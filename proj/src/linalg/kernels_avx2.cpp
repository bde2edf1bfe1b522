#include "trigor/linalg/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace trigor::kernels::avx2 {

#if defined(__AVX2__)

namespace {

// x < 2^31 per lane, m = floor(2^32 / p). Quotient estimate is short by at most one.
inline __m256i barrett(__m256i x, __m256i m, __m256i p) {
  __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(x, m), 32);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), m);
  __m256i q = _mm256_blend_epi32(even, odd, 0xAA);
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, p));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

}  // namespace

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t n) {
  if (p >= kMaxModulus) return scalar::axpy_mod(dst, src, f, p, n);
  const std::uint32_t mm = static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(mm));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(f));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vf));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett(x, vm, vp));
  }
  scalar::axpy_mod(dst + i, src + i, f, p, n - i);
}

void scale_mod(std::uint32_t* dst, std::uint32_t f, std::uint32_t p, std::size_t n) {
  if (p >= kMaxModulus) return scalar::scale_mod(dst, f, p, n);
  const std::uint32_t mm = static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(mm));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(f));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett(_mm256_mullo_epi32(d, vf), vm, vp));
  }
  scalar::scale_mod(dst + i, f, p, n - i);
}

#else

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t n) {
  scalar::axpy_mod(dst, src, f, p, n);
}
void scale_mod(std::uint32_t* dst, std::uint32_t f, std::uint32_t p, std::size_t n) { scalar::scale_mod(dst, f, p, n); }

#endif

}  // namespace trigor::kernels::avx2

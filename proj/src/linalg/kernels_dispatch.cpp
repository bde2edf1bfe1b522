#include <atomic>
#include <cstdlib>
#include <cstring>

#include "trigor/linalg/kernels.hpp"

namespace trigor::kernels {

namespace {

bool detect_avx2() {
#if defined(TRIGOR_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() {
  const char* force = std::getenv("TRIGOR_FORCE_SCALAR");
  if (force && std::strcmp(force, "0") != 0) return Isa::Scalar;
  return detect_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

bool avx2_supported() { return detect_avx2(); }

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (isa == Isa::Avx2 && !avx2_supported()) isa = Isa::Scalar;
  current().store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t n) {
  if (f == 0) return;
  if (active_isa() == Isa::Avx2 && n >= 8)
    avx2::axpy_mod(dst, src, f, p, n);
  else
    scalar::axpy_mod(dst, src, f, p, n);
}

void scale_mod(std::uint32_t* dst, std::uint32_t f, std::uint32_t p, std::size_t n) {
  if (active_isa() == Isa::Avx2 && n >= 8)
    avx2::scale_mod(dst, f, p, n);
  else
    scalar::scale_mod(dst, f, p, n);
}

}  // namespace trigor::kernels

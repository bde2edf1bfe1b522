#include <random>
#include <vector>

#include "doctest.h"
#include "trigor/linalg/kernels.hpp"
#include "trigor/linalg/matrix.hpp"

using namespace trigor;

namespace {

struct IsaGuard {
  kernels::Isa saved = kernels::active_isa();
  ~IsaGuard() { kernels::set_isa(saved); }
};

}  // namespace

TEST_CASE("avx2 and scalar row kernels agree bit for bit") {
  if (!kernels::avx2_supported()) {
    MESSAGE("avx2 not available; vector path not exercised");
    return;
  }
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u, 5u, 251u, 32749u, 65521u, 2147483647u}) {
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 129u}) {
      std::vector<std::uint32_t> a(n), b(n);
      for (auto& x : a) x = static_cast<std::uint32_t>(rng() % p);
      for (auto& x : b) x = static_cast<std::uint32_t>(rng() % p);
      for (std::uint32_t f : {0u, 1u, p - 1, static_cast<std::uint32_t>(rng() % p)}) {
        auto s1 = a, s2 = a;
        kernels::scalar::axpy_mod(s1.data(), b.data(), f, p, n);
        kernels::avx2::axpy_mod(s2.data(), b.data(), f, p, n);
        CHECK(s1 == s2);
        auto t1 = a, t2 = a;
        kernels::scalar::scale_mod(t1.data(), f, p, n);
        kernels::avx2::scale_mod(t2.data(), f, p, n);
        CHECK(t1 == t2);
      }
    }
  }
}

TEST_CASE("scalar kernel matches the definition") {
  std::vector<std::uint32_t> a{1, 2, 3, 4}, b{4, 3, 2, 1};
  kernels::scalar::axpy_mod(a.data(), b.data(), 2, 5, 4);
  CHECK(a == std::vector<std::uint32_t>{4, 3, 2, 1});
  kernels::scalar::scale_mod(a.data(), 3, 5, 4);
  CHECK(a == std::vector<std::uint32_t>{2, 4, 1, 3});
}

TEST_CASE("elimination results do not depend on the selected kernel") {
  IsaGuard guard;
  std::mt19937 rng(5);
  for (std::uint32_t p : {2u, 3u, 7919u}) {
    linalg::Field f = linalg::Field::prime(p);
    for (int trial = 0; trial < 10; ++trial) {
      std::size_t r = 3 + rng() % 20, c = 3 + rng() % 20;
      linalg::Matrix m(f, r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<long long>(rng() % p));
      kernels::set_isa(kernels::Isa::Scalar);
      auto e1 = linalg::rref(m);
      auto k1 = linalg::kernel_basis(m);
      kernels::set_isa(kernels::avx2_supported() ? kernels::Isa::Avx2 : kernels::Isa::Scalar);
      auto e2 = linalg::rref(m);
      auto k2 = linalg::kernel_basis(m);
      CHECK(e1.reduced == e2.reduced);
      CHECK(e1.pivots == e2.pivots);
      CHECK(k1 == k2);
    }
  }
}

#include <stdexcept>

#include "trigor/algebra/module.hpp"

namespace trigor::algebra {

namespace {

// Unknowns: X_v (dN_v x dM_v) row-major, stacked by vertex.
Matrix intertwining_system(const Module& m, const Module& n, std::vector<std::size_t>& off) {
  const auto& alg = m.algebra();
  const int nv = alg->num_vertices();
  const Field f = m.field();
  off.assign(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
  std::size_t rows = 0;
  for (const auto& ar : alg->arrows()) rows += n.dim(ar.target) * m.dim(ar.source);
  Matrix sys(f, rows, off[nv]);
  std::size_t r0 = 0;
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const auto& ar = alg->arrows()[a];
    const int v = ar.source, w = ar.target;
    const std::size_t dmv = m.dim(v), dmw = m.dim(w), dnv = n.dim(v), dnw = n.dim(w);
    const Matrix& Na = n.arrow_map(a);
    const Matrix& Ma = m.arrow_map(a);
    // row (i, j): sum_k Na[i][k] X_v[k][j] - sum_k X_w[i][k] Ma[k][j]
    for (std::size_t i = 0; i < dnw; ++i)
      for (std::size_t k = 0; k < dnv; ++k) {
        if (Na.entry_is_zero(i, k)) continue;
        Scalar c = Na.at(i, k);
        for (std::size_t j = 0; j < dmv; ++j) sys.add_scaled_entry(r0 + i * dmv + j, off[v] + k * dmv + j, c);
      }
    for (std::size_t k = 0; k < dmw; ++k)
      for (std::size_t j = 0; j < dmv; ++j) {
        if (Ma.entry_is_zero(k, j)) continue;
        Scalar c = -Ma.at(k, j);
        for (std::size_t i = 0; i < dnw; ++i) sys.add_scaled_entry(r0 + i * dmv + j, off[w] + i * dmw + k, c);
      }
    r0 += dnw * dmv;
  }
  return sys;
}

Morphism morphism_from_vector(const Module& m, const Module& n, const Matrix& vec, std::size_t col,
                              const std::vector<std::size_t>& off) {
  std::vector<Matrix> maps;
  for (int v = 0; v < m.algebra()->num_vertices(); ++v) {
    Matrix x(m.field(), n.dim(v), m.dim(v));
    for (std::size_t i = 0; i < n.dim(v); ++i)
      for (std::size_t j = 0; j < m.dim(v); ++j)
        if (!vec.entry_is_zero(off[v] + i * m.dim(v) + j, col)) x.set(i, j, vec.at(off[v] + i * m.dim(v) + j, col));
    maps.push_back(std::move(x));
  }
  return Morphism::unchecked(m, n, maps);
}

}  // namespace

std::vector<Morphism> hom_basis(const Module& m, const Module& n) {
  require_same_algebra(m.algebra(), n.algebra(), "hom_basis");
  std::vector<std::size_t> off;
  Matrix sys = intertwining_system(m, n, off);
  Matrix k = sys.rows() == 0 ? Matrix::identity(m.field(), sys.cols()) : linalg::kernel_basis(sys);
  std::vector<Morphism> out;
  out.reserve(k.cols());
  for (std::size_t c = 0; c < k.cols(); ++c) out.push_back(morphism_from_vector(m, n, k, c, off));
  return out;
}

std::size_t hom_dim(const Module& m, const Module& n) {
  require_same_algebra(m.algebra(), n.algebra(), "hom_dim");
  std::vector<std::size_t> off;
  Matrix sys = intertwining_system(m, n, off);
  return sys.cols() - linalg::rank(sys);
}

Morphism combine(const std::vector<Morphism>& basis, const std::vector<Scalar>& coeffs, const Module& m, const Module& n) {
  if (basis.size() != coeffs.size()) throw std::invalid_argument("combine: coefficient count mismatch");
  Morphism out = Morphism::zero(m, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coeffs[i].is_zero()) out = out + basis[i].scaled(coeffs[i]);
  return out;
}

}  // namespace trigor::algebra

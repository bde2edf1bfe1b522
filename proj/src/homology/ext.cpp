#include "trigor/homology/resolution.hpp"

namespace trigor::homology {

namespace {

// Hom(P_j, N) -> Hom(P_{j+1}, N)
Matrix cochain_map(const Resolution& r, const Module& n, std::size_t j) {
  const auto& src = r.generators(j);
  const auto& tgt = r.generators(j + 1);
  const auto& c = r.coefficients(j + 1);
  std::vector<std::size_t> so{0}, to{0};
  for (int v : src) so.push_back(so.back() + n.dim(v));
  for (int v : tgt) to.push_back(to.back() + n.dim(v));
  Matrix m(n.field(), to.back(), so.back());
  for (std::size_t k = 0; k < tgt.size(); ++k)
    for (std::size_t l = 0; l < src.size(); ++l)
      for (const auto& t : c[k][l]) m.add_block(to[k], so[l], n.action(t.index), t.coeff);
  return m;
}

// U (x) P_{j+1} -> U (x) P_j, using U (x) P_v = U e_v
Matrix chain_map(const Resolution& r, const Bimodule& u, std::size_t j) {
  const auto& src = r.generators(j + 1);
  const auto& tgt = r.generators(j);
  const auto& c = r.coefficients(j + 1);
  std::vector<std::vector<std::size_t>> idx(u.right_algebra()->num_vertices());
  for (std::size_t i = 0; i < u.dim(); ++i) idx[u.right_vertex(i)].push_back(i);
  std::vector<std::size_t> so{0}, to{0};
  for (int v : src) so.push_back(so.back() + idx[v].size());
  for (int v : tgt) to.push_back(to.back() + idx[v].size());
  Matrix m(u.field(), to.back(), so.back());
  for (std::size_t k = 0; k < src.size(); ++k)
    for (std::size_t l = 0; l < tgt.size(); ++l) {
      if (c[k][l].empty()) continue;
      Matrix act(u.field(), u.dim(), u.dim());
      for (const auto& t : c[k][l]) act.add_block(0, 0, u.right(t.index), t.coeff);
      m.set_block(to[l], so[k], act.select_rows(idx[tgt[l]]).select_columns(idx[src[k]]));
    }
  return m;
}

std::size_t cochain_dim(const Resolution& r, const Module& n, std::size_t j) {
  std::size_t d = 0;
  for (int v : r.generators(j)) d += n.dim(v);
  return d;
}

}  // namespace

std::size_t ext_dim(const Module& m, const Module& n, std::size_t i) {
  algebra::require_same_algebra(m.algebra(), n.algebra(), "ext_dim");
  if (m.is_zero() || n.is_zero()) return 0;
  auto r = projective_resolution(m, i + 1);
  std::size_t d = cochain_dim(*r, n, i);
  if (d == 0) return 0;
  std::size_t out = linalg::rank(cochain_map(*r, n, i));
  std::size_t in = i == 0 ? 0 : linalg::rank(cochain_map(*r, n, i - 1));
  return d - out - in;
}

std::size_t ext_dim_dual(const Module& m, const Module& n, std::size_t i) {
  return ext_dim(algebra::dual(n), algebra::dual(m), i);
}

std::size_t tor_dim(const Bimodule& u, const Module& m, std::size_t i) {
  algebra::require_same_algebra(u.right_algebra(), m.algebra(), "tor_dim");
  if (m.is_zero() || u.dim() == 0) return 0;
  auto r = projective_resolution(m, i + 1);
  std::size_t d = 0;
  for (int v : r->generators(i))
    for (std::size_t k = 0; k < u.dim(); ++k) d += u.right_vertex(k) == v;
  if (d == 0) return 0;
  std::size_t in = linalg::rank(chain_map(*r, u, i));
  std::size_t out = i == 0 ? 0 : linalg::rank(chain_map(*r, u, i - 1));
  return d - in - out;
}

}  // namespace trigor::homology

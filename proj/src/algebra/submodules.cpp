#include <stdexcept>

#include "trigor/algebra/module.hpp"

namespace trigor::algebra {

namespace {

// Module on the given independent column bases, with arrow maps obtained by solving B_w X = M_a B_v.
SubModule restrict_to(const Module& m, const std::vector<Matrix>& bases) {
  const auto& alg = m.algebra();
  std::vector<std::size_t> dims;
  for (const auto& b : bases) dims.push_back(b.cols());
  std::vector<Matrix> arrows;
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const auto& ar = alg->arrows()[a];
    Matrix img = m.arrow_map(a) * bases[ar.source];
    if (img.cols() == 0) {
      arrows.emplace_back(m.field(), dims[ar.target], 0);
      continue;
    }
    auto x = linalg::solve(bases[ar.target], img);
    if (!x) throw std::invalid_argument("subspaces are not closed under the arrow '" + ar.label + "'");
    arrows.push_back(*x);
  }
  Module sub(alg, dims, arrows);
  return {sub, Morphism::unchecked(sub, m, bases)};
}

SubModule quotient_by_bases(const Module& m, const std::vector<Matrix>& spans) {
  const auto& alg = m.algebra();
  const int nv = alg->num_vertices();
  std::vector<linalg::Quotient> q;
  std::vector<std::size_t> dims;
  for (int v = 0; v < nv; ++v) {
    q.push_back(linalg::quotient_by(spans[v], m.dim(v)));
    dims.push_back(q.back().projection.rows());
  }
  std::vector<Matrix> arrows;
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const auto& ar = alg->arrows()[a];
    arrows.push_back(q[ar.target].projection * m.arrow_map(a) * q[ar.source].section);
  }
  Module quo(alg, dims, arrows);
  std::vector<Matrix> proj;
  for (int v = 0; v < nv; ++v) proj.push_back(q[v].projection);
  return {quo, Morphism::unchecked(m, quo, proj)};
}

}  // namespace

SubModule kernel_of(const Morphism& f) {
  std::vector<Matrix> bases;
  for (const auto& x : f.maps()) bases.push_back(linalg::kernel_basis(x));
  return restrict_to(f.source(), bases);
}

SubModule cokernel_of(const Morphism& f) { return quotient_by_bases(f.target(), f.maps()); }

SubModule image_of(const Morphism& f) {
  std::vector<Matrix> bases;
  for (const auto& x : f.maps()) bases.push_back(linalg::image_basis(x));
  return restrict_to(f.target(), bases);
}

SubModule submodule(const Module& m, const std::vector<Matrix>& subspaces) {
  std::vector<Matrix> bases;
  for (const auto& s : subspaces) bases.push_back(linalg::image_basis(s));
  return restrict_to(m, bases);
}

SubModule quotient(const Module& m, const std::vector<Matrix>& subspaces) {
  // Validate closure before quotienting.
  (void)submodule(m, subspaces);
  return quotient_by_bases(m, subspaces);
}

namespace {

std::vector<Matrix> radical_spaces(const Module& m) {
  const auto& alg = m.algebra();
  std::vector<std::vector<Matrix>> parts(alg->num_vertices());
  for (int a = 0; a < alg->num_arrows(); ++a) parts[alg->arrows()[a].target].push_back(m.arrow_map(a));
  std::vector<Matrix> spaces;
  for (int v = 0; v < alg->num_vertices(); ++v)
    spaces.push_back(parts[v].empty() ? Matrix(m.field(), m.dim(v), 0) : Matrix::hstack(parts[v], m.field(), m.dim(v)));
  return spaces;
}

}  // namespace

SubModule radical(const Module& m) { return submodule(m, radical_spaces(m)); }

SubModule top(const Module& m) { return quotient_by_bases(m, radical_spaces(m)); }

SubModule socle(const Module& m) {
  const auto& alg = m.algebra();
  std::vector<std::vector<Matrix>> parts(alg->num_vertices());
  for (int a = 0; a < alg->num_arrows(); ++a) parts[alg->arrows()[a].source].push_back(m.arrow_map(a));
  std::vector<Matrix> spaces;
  for (int v = 0; v < alg->num_vertices(); ++v) {
    if (parts[v].empty()) {
      spaces.push_back(Matrix::identity(m.field(), m.dim(v)));
      continue;
    }
    Matrix stacked = parts[v][0];
    for (std::size_t k = 1; k < parts[v].size(); ++k) stacked = Matrix::vstack(stacked, parts[v][k]);
    spaces.push_back(linalg::kernel_basis(stacked));
  }
  return restrict_to(m, spaces);
}

SubModule generated_submodule(const Module& m, const std::vector<VertexVector>& gens) {
  const auto& alg = m.algebra();
  std::vector<std::vector<Matrix>> parts(alg->num_vertices());
  for (const auto& g : gens)
    for (int i = 0; i < alg->dim(); ++i) {
      const auto& b = alg->basis()[i];
      if (b.source == g.vertex) parts[b.target].push_back(m.action(i) * g.vec);
    }
  std::vector<Matrix> spaces;
  for (int v = 0; v < alg->num_vertices(); ++v)
    spaces.push_back(parts[v].empty() ? Matrix(m.field(), m.dim(v), 0) : Matrix::hstack(parts[v], m.field(), m.dim(v)));
  return submodule(m, spaces);
}

}  // namespace trigor::algebra

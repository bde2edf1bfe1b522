#include <stdexcept>

#include "trigor/trimat/triangle.hpp"

namespace trigor::trimat {

TriangleModule functor_p(const TriangleAlgebra& ta, const Module& m1, const Module& m2) {
  Tensor t = algebra::tensor_over(ta.U(), m1);
  auto ds = algebra::direct_sum({t.module, m2}, ta.B());
  return TriangleModule::make(ta, m1, ds.sum, ds.injections[0]);
}

std::pair<Module, Module> functor_q(const TriangleModule& m) { return {m.m1, m.m2}; }

TriangleModule functor_h(const TriangleAlgebra& ta, const Module& m1, const Module& m2) {
  auto h = algebra::hom_from_bimodule(ta.U(), m2);
  auto ds = algebra::direct_sum({m1, h.module}, ta.A());
  const Field f = ta.field();
  const Matrix proj = ds.projections[1].total();
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < ta.U().dim(); ++i) {
    Matrix g(f, m2.total_dim(), h.module.total_dim());
    for (int v = 0; v < ta.a_vertices(); ++v)
      for (std::size_t k = 0; k < h.maps[v].size(); ++k) g.set_block(0, h.module.offset(v) + k, h.maps[v][k].column_at(i));
    act.push_back(g * proj);
  }
  return TriangleModule::from_u_action(ta, ds.sum, m2, act);
}

TriangleModule functor_r(const TriangleAlgebra& ta, const Module& m1, const Module& m2) {
  Tensor t = algebra::tensor_over(ta.U(), m1);
  return TriangleModule::make(ta, m1, m2, Morphism::zero(t.module, m2));
}

std::pair<Module, Module> functor_s(const TriangleModule& m) { return {m.m1, cokernel_of_phi(m).module}; }

TriangleMorphism functor_p(const TriangleAlgebra& ta, const Morphism& f1, const Morphism& f2) {
  Tensor ts = algebra::tensor_over(ta.U(), f1.source()), tt = algebra::tensor_over(ta.U(), f1.target());
  Morphism uf = algebra::tensor_map(ta.U(), f1, ts, tt);
  auto src = algebra::direct_sum({ts.module, f2.source()}, ta.B());
  auto tgt = algebra::direct_sum({tt.module, f2.target()}, ta.B());
  Morphism g = algebra::block_morphism(src, tgt, {{uf, std::nullopt}, {std::nullopt, f2}});
  return {f1, g};
}

algebra::SubModule cokernel_of_phi(const TriangleModule& m) { return algebra::cokernel_of(m.phi); }

Morphism phi_adjoint(const TriangleAlgebra& ta, const TriangleModule& m, const algebra::HomFromU& h) {
  const auto& u = ta.U();
  const Field f = ta.field();
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < u.dim(); ++i) acts.push_back(m.u_action(i));
  std::vector<Matrix> maps;
  for (int v = 0; v < ta.a_vertices(); ++v) {
    std::vector<Matrix> cols;
    for (const auto& g : h.maps[v]) cols.push_back(g.vectorize());
    Matrix basis = Matrix::hstack(cols, f, m.m2.total_dim() * u.dim());
    Matrix x(f, h.maps[v].size(), m.m1.dim(v));
    for (std::size_t j = 0; j < m.m1.dim(v); ++j) {
      Matrix g(f, m.m2.total_dim(), u.dim());
      for (std::size_t i = 0; i < u.dim(); ++i)
        if (u.right_vertex(i) == v) g.set_block(0, i, acts[i].column_at(m.m1.offset(v) + j));
      auto c = linalg::solve(basis, g.vectorize());
      if (!c) throw std::logic_error("phi_adjoint: image is not B-linear");
      x.set_block(0, j, *c);
    }
    maps.push_back(std::move(x));
  }
  return Morphism(m.m1, h.module, maps);
}

bool is_projective_triple(const TriangleModule& m) {
  if (!m.phi.is_injective()) return false;
  if (!algebra::is_projective(m.m1)) return false;
  return algebra::is_projective(cokernel_of_phi(m).module);
}

bool is_injective_triple(const TriangleAlgebra& ta, const TriangleModule& m) {
  if (!algebra::is_injective(m.m2)) return false;
  auto h = algebra::hom_from_bimodule(ta.U(), m.m2);
  Morphism adj = phi_adjoint(ta, m, h);
  if (!adj.is_surjective()) return false;
  return algebra::is_injective(algebra::kernel_of(adj).module);
}

TriangleAlgebra build_T_theta(AlgebraPtr r, AlgebraPtr s, const Matrix& theta, std::string name) {
  Bimodule u = Bimodule::from_morphism(s, r, theta);
  if (!algebra::is_projective(u.as_right_module()))
    throw std::invalid_argument("T(theta): S is not flat as a right R-module");
  if (name.empty()) name = "T(theta)";
  return TriangleAlgebra::make(std::move(r), std::move(s), std::move(u), std::move(name));
}

}  // namespace trigor::trimat

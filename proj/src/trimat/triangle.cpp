#include "trigor/trimat/triangle.hpp"

#include <sstream>
#include <stdexcept>

namespace trigor::trimat {

using algebra::Algebra;
using algebra::Element;

namespace {

Element column_element(const Matrix& m, std::size_t col) {
  Element e;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m.entry_is_zero(i, col)) e.push_back({static_cast<int>(i), m.at(i, col)});
  return e;
}

Element shifted(const Element& e, int by) {
  Element out = e;
  for (auto& t : out) t.index += by;
  return out;
}

}  // namespace

TriangleAlgebra TriangleAlgebra::make(AlgebraPtr a, AlgebraPtr b, Bimodule u, std::string name) {
  algebra::require_same_algebra(u.right_algebra(), a, "TriangleAlgebra (right side of U)");
  algebra::require_same_algebra(u.left_algebra(), b, "TriangleAlgebra (left side of U)");
  const Field f = a->field();
  const int da = a->dim(), db = b->dim(), du = static_cast<int>(u.dim()), na = a->num_vertices();
  const int n = da + db + du;

  Algebra::Structure s{f, {}, {}, {}, {}, {}, {}};
  for (const auto& v : a->vertices()) s.vertices.push_back("a" + v);
  for (const auto& v : b->vertices()) s.vertices.push_back("b" + v);
  for (int i = 0; i < da; ++i) {
    s.source.push_back(a->basis()[i].source);
    s.target.push_back(a->basis()[i].target);
    s.labels.push_back("a:" + a->basis_label(i));
  }
  for (int i = 0; i < db; ++i) {
    s.source.push_back(na + b->basis()[i].source);
    s.target.push_back(na + b->basis()[i].target);
    s.labels.push_back("b:" + b->basis_label(i));
  }
  for (int i = 0; i < du; ++i) {
    s.source.push_back(u.right_vertex(i));
    s.target.push_back(na + u.left_vertex(i));
    s.labels.push_back("u" + std::to_string(i));
  }
  for (int v = 0; v < na; ++v) s.idempotents.push_back(a->idempotent(v));
  for (int w = 0; w < b->num_vertices(); ++w) s.idempotents.push_back(da + b->idempotent(w));

  s.product.assign(static_cast<std::size_t>(n) * n, Element{});
  auto at = [&](int i, int j) -> Element& { return s.product[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) at(i, j) = a->product(i, j);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j) at(da + i, da + j) = shifted(b->product(i, j), da);
  const int uo = da + db;
  for (int k = 0; k < du; ++k) {
    for (int j = 0; j < da; ++j) at(uo + k, j) = shifted(column_element(u.right(j), k), uo);
    for (int i = 0; i < db; ++i) at(da + i, uo + k) = shifted(column_element(u.left(i), k), uo);
  }

  if (name.empty()) name = "T(" + a->name() + "," + b->name() + ")";
  auto pres = Algebra::from_structure(s, name);
  TriangleAlgebra ta;
  ta.d_ = std::make_shared<const Data>(Data{std::move(a), std::move(b), pres.algebra, std::move(u),
                                            std::move(pres.old_to_new), std::move(pres.new_to_old)});
  return ta;
}

TriangleAlgebra TriangleAlgebra::of_algebra(AlgebraPtr r, std::string name) {
  if (name.empty()) name = "T(" + r->name() + ")";
  return make(r, r, Bimodule::regular(r), std::move(name));
}

Matrix TriangleAlgebra::structure_action(const Module& flat, int k) const {
  return flat.element_action(column_element(d_->old_to_new, static_cast<std::size_t>(k)));
}

// ---------------------------------------------------------------------------

TriangleModule TriangleModule::make(const TriangleAlgebra& ta, Module m1, Module m2, Morphism phi) {
  algebra::require_same_algebra(m1.algebra(), ta.A(), "TriangleModule (M1)");
  algebra::require_same_algebra(m2.algebra(), ta.B(), "TriangleModule (M2)");
  auto t = std::make_shared<const Tensor>(algebra::tensor_over(ta.U(), m1));
  if (!(phi.source() == t->module) || !(phi.target() == m2))
    throw std::invalid_argument("TriangleModule: phi must map U (x) M1 to M2");
  return {std::move(m1), std::move(m2), std::move(phi), std::move(t)};
}

TriangleModule TriangleModule::from_u_action(const TriangleAlgebra& ta, Module m1, Module m2, const std::vector<Matrix>& act) {
  const auto& u = ta.U();
  if (act.size() != u.dim()) throw std::invalid_argument("from_u_action: need one matrix per U basis element");
  auto t = std::make_shared<const Tensor>(algebra::tensor_over(u, m1));
  const Field f = ta.field();
  std::vector<Matrix> maps;
  for (int w = 0; w < ta.B()->num_vertices(); ++w) {
    const auto& pw = t->pairs[w];
    Matrix y(f, m2.dim(w), pw.size());
    for (std::size_t c = 0; c < pw.size(); ++c) y.set_block(0, c, act[pw[c].first].block(m2.offset(w), pw[c].second, m2.dim(w), 1));
    Matrix phi_w = y * t->section[w];
    if (!(phi_w * t->projection[w] == y))
      throw std::invalid_argument("from_u_action: the U-action is not balanced over A");
    maps.push_back(std::move(phi_w));
  }
  for (std::size_t i = 0; i < u.dim(); ++i) {
    // u_i only sees e_v M1 and lands in e_w M2
    const int v = u.right_vertex(i), w = u.left_vertex(i);
    for (std::size_t r = 0; r < m2.total_dim(); ++r)
      for (std::size_t c = 0; c < m1.total_dim(); ++c) {
        if (act[i].entry_is_zero(r, c)) continue;
        const bool row_ok = r >= m2.offset(w) && r < m2.offset(w) + m2.dim(w);
        const bool col_ok = c >= m1.offset(v) && c < m1.offset(v) + m1.dim(v);
        if (!row_ok || !col_ok) throw std::invalid_argument("from_u_action: action does not respect idempotents");
      }
  }
  Morphism phi(t->module, m2, maps);
  return {std::move(m1), std::move(m2), std::move(phi), std::move(t)};
}

TriangleModule TriangleModule::zero(const TriangleAlgebra& ta) {
  Module z1 = Module::zero(ta.A()), z2 = Module::zero(ta.B());
  auto t = std::make_shared<const Tensor>(algebra::tensor_over(ta.U(), z1));
  Morphism phi = Morphism::zero(t->module, z2);
  return {z1, z2, phi, t};
}

Matrix TriangleModule::u_action(std::size_t i) const {
  const std::size_t mt = m1.total_dim();
  const Matrix p = phi.total();
  return p * tensor->surjection.block(0, i * mt, tensor->surjection.rows(), mt);
}

std::string TriangleModule::describe() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < m1.dims().size(); ++i) os << (i ? "," : "") << m1.dim(static_cast<int>(i));
  os << ";";
  for (std::size_t i = 0; i < m2.dims().size(); ++i) os << (i ? "," : "") << m2.dim(static_cast<int>(i));
  os << ") rank phi=" << linalg::rank(phi.total());
  return os.str();
}

bool TriangleMorphism::commutes(const TriangleAlgebra& ta, const TriangleModule& src, const TriangleModule& tgt) const {
  Morphism uf = algebra::tensor_map(ta.U(), f1, *src.tensor, *tgt.tensor);
  return algebra::compose(f2, src.phi) == algebra::compose(tgt.phi, uf);
}

// ---------------------------------------------------------------------------

Module triple_to_flat(const TriangleAlgebra& ta, const TriangleModule& m) {
  const auto& t = *ta.T();
  const Field f = ta.field();
  const std::size_t t1 = m.m1.total_dim(), t2 = m.m2.total_dim(), tot = t1 + t2;
  const std::size_t da = ta.A()->dim(), db = ta.B()->dim(), du = ta.U().dim();
  std::vector<Matrix> old_actions;
  for (std::size_t i = 0; i < da; ++i) {
    Matrix x(f, tot, tot);
    x.set_block(0, 0, m.m1.element_action({{static_cast<int>(i), linalg::Scalar::one(f)}}));
    old_actions.push_back(std::move(x));
  }
  for (std::size_t i = 0; i < db; ++i) {
    Matrix x(f, tot, tot);
    x.set_block(t1, t1, m.m2.element_action({{static_cast<int>(i), linalg::Scalar::one(f)}}));
    old_actions.push_back(std::move(x));
  }
  for (std::size_t i = 0; i < du; ++i) {
    Matrix x(f, tot, tot);
    x.set_block(t1, 0, m.u_action(i));
    old_actions.push_back(std::move(x));
  }
  std::vector<std::size_t> dims(m.m1.dims());
  for (auto d : m.m2.dims()) dims.push_back(d);
  std::vector<std::size_t> offs(dims.size(), 0);
  for (std::size_t v = 1; v < dims.size(); ++v) offs[v] = offs[v - 1] + dims[v - 1];

  const Matrix& n2o = ta.new_to_old();
  std::vector<Matrix> maps;
  for (int a = 0; a < t.num_arrows(); ++a) {
    const auto& ar = t.arrows()[a];
    const auto e = static_cast<std::size_t>(t.arrow_element(a));
    Matrix total(f, tot, tot);
    for (std::size_t k = 0; k < n2o.rows(); ++k)
      if (!n2o.entry_is_zero(k, e)) total.add_block(0, 0, old_actions[k], n2o.at(k, e));
    maps.push_back(total.block(offs[ar.target], offs[ar.source], dims[ar.target], dims[ar.source]));
  }
  return Module(ta.T(), dims, maps);
}

TriangleModule flat_to_triple(const TriangleAlgebra& ta, const Module& n) {
  algebra::require_same_algebra(n.algebra(), ta.T(), "flat_to_triple");
  const auto& A = *ta.A();
  const auto& B = *ta.B();
  const int na = A.num_vertices();
  std::vector<std::size_t> d1(n.dims().begin(), n.dims().begin() + na), d2(n.dims().begin() + na, n.dims().end());
  const std::size_t t1 = n.offset(na);
  const std::size_t t2 = n.total_dim() - t1;
  std::vector<Matrix> a1, a2;
  for (int a = 0; a < A.num_arrows(); ++a) {
    const auto& ar = A.arrows()[a];
    Matrix x = ta.structure_action(n, static_cast<int>(ta.a_offset()) + A.arrow_element(a));
    a1.push_back(x.block(n.offset(ar.target), n.offset(ar.source), n.dim(ar.target), n.dim(ar.source)));
  }
  for (int b = 0; b < B.num_arrows(); ++b) {
    const auto& ar = B.arrows()[b];
    Matrix x = ta.structure_action(n, static_cast<int>(ta.b_offset()) + B.arrow_element(b));
    a2.push_back(x.block(n.offset(na + ar.target), n.offset(na + ar.source), n.dim(na + ar.target), n.dim(na + ar.source)));
  }
  Module m1(ta.A(), d1, a1), m2(ta.B(), d2, a2);
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < ta.U().dim(); ++i)
    act.push_back(ta.structure_action(n, static_cast<int>(ta.u_offset() + i)).block(t1, 0, t2, t1));
  return TriangleModule::from_u_action(ta, m1, m2, act);
}

Morphism triple_to_flat(const TriangleAlgebra& ta, const TriangleMorphism& f, const Module& src, const Module& tgt) {
  std::vector<Matrix> maps;
  for (int v = 0; v < ta.a_vertices(); ++v) maps.push_back(f.f1.at(v));
  for (int w = 0; w < ta.B()->num_vertices(); ++w) maps.push_back(f.f2.at(w));
  return Morphism(src, tgt, maps);
}

TriangleMorphism flat_to_triple(const TriangleAlgebra& ta, const Morphism& f) {
  TriangleModule s = flat_to_triple(ta, f.source()), t = flat_to_triple(ta, f.target());
  const int na = ta.a_vertices();
  std::vector<Matrix> m1, m2;
  for (int v = 0; v < na; ++v) m1.push_back(f.at(v));
  for (int w = 0; w < ta.B()->num_vertices(); ++w) m2.push_back(f.at(na + w));
  return {Morphism(s.m1, t.m1, m1), Morphism(s.m2, t.m2, m2)};
}

}  // namespace trigor::trimat

#include <stdexcept>

#include "trigor/algebra/decompose.hpp"

namespace trigor::algebra {

namespace {

// Summand cut out by an idempotent endomorphism, with inclusion and retraction.
struct Piece {
  Module module;
  Morphism inclusion;   // piece -> M
  Morphism projection;  // M -> piece
};

Piece image_piece(const Module& m, const Matrix& e) {
  Morphism em = Morphism::from_total(m, m, e, false);
  SubModule im = image_of(em);
  std::vector<Matrix> proj;
  for (int v = 0; v < m.algebra()->num_vertices(); ++v) {
    auto x = linalg::solve(im.map.at(v), em.at(v));
    if (!x) throw std::logic_error("idempotent image retraction failed");
    proj.push_back(*x);
  }
  return {im.module, im.map, Morphism::unchecked(m, im.module, proj)};
}

}  // namespace

Decomposition decompose(const Module& m, std::uint64_t seed) {
  Decomposition out;
  std::vector<Piece> stack{{m, Morphism::identity(m), Morphism::identity(m)}};
  while (!stack.empty()) {
    Piece p = std::move(stack.back());
    stack.pop_back();
    if (p.module.is_zero()) continue;
    SplitResult s = split_or_local(MatrixAlgebra::endomorphisms(p.module), seed);
    if (s.local) {
      out.summands.push_back(p.module);
      out.inclusions.push_back(p.inclusion);
      out.projections.push_back(p.projection);
      continue;
    }
    const Matrix& e = *s.idempotent;
    Matrix f = Matrix::identity(m.field(), e.rows()) - e;
    // Push the complement first so summands come out in idempotent order.
    for (const Matrix* idem : {static_cast<const Matrix*>(&f), &e}) {
      Piece q = image_piece(p.module, *idem);
      stack.push_back({q.module, compose(p.inclusion, q.inclusion), compose(q.projection, p.projection)});
    }
  }
  for (std::size_t i = 0; i < out.summands.size(); ++i) {
    bool found = false;
    for (auto& cls : out.classes)
      if (iso_indecomposable(out.summands[cls.first], out.summands[i])) {
        ++cls.second;
        found = true;
        break;
      }
    if (!found) out.classes.push_back({i, 1});
  }
  return out;
}

bool is_indecomposable(const Module& m) {
  if (m.is_zero()) return false;
  return split_or_local(MatrixAlgebra::endomorphisms(m)).local;
}

std::optional<Morphism> iso_indecomposable(const Module& x, const Module& y) {
  if (x.dims() != y.dims()) return std::nullopt;
  if (x.is_zero()) return Morphism::zero(x, y);
  auto fs = hom_basis(x, y);
  auto gs = hom_basis(y, x);
  for (const auto& f : fs)
    for (const auto& g : gs)
      if (compose(g, f).is_iso()) return f;
  return std::nullopt;
}

std::optional<Morphism> find_isomorphism(const Module& m, const Module& n) {
  require_same_algebra(m.algebra(), n.algebra(), "find_isomorphism");
  if (m.dims() != n.dims()) return std::nullopt;
  if (m.is_zero()) return Morphism::zero(m, n);
  if (hom_dim(m, n) != hom_dim(m, m)) return std::nullopt;
  Decomposition dm = decompose(m), dn = decompose(n);
  if (dm.summands.size() != dn.summands.size()) return std::nullopt;
  std::vector<bool> used(dn.summands.size(), false);
  Morphism total = Morphism::zero(m, n);
  for (std::size_t i = 0; i < dm.summands.size(); ++i) {
    bool matched = false;
    for (std::size_t j = 0; j < dn.summands.size() && !matched; ++j) {
      if (used[j]) continue;
      auto phi = iso_indecomposable(dm.summands[i], dn.summands[j]);
      if (!phi) continue;
      used[j] = matched = true;
      total = total + compose(dn.inclusions[j], compose(*phi, dm.projections[i]));
    }
    if (!matched) return std::nullopt;
  }
  if (!total.is_iso()) throw std::logic_error("assembled isomorphism is not invertible");
  return total;
}

bool is_isomorphic(const Module& m, const Module& n) { return find_isomorphism(m, n).has_value(); }

std::optional<AddWitness> add_witness(const Module& x, const Module& c) {
  require_same_algebra(x.algebra(), c.algebra(), "add_witness");
  const Field f = x.field();
  if (x.is_zero()) {
    Module z = Module::zero(x.algebra());
    return AddWitness{0, Morphism::zero(x, z), Morphism::zero(z, x)};
  }
  auto fs = hom_basis(x, c);
  auto gs = hom_basis(c, x);
  if (fs.empty() || gs.empty()) return std::nullopt;
  const std::size_t n = x.total_dim();
  // sum_{i,t} c_{it} g_t f_i = id
  std::vector<Matrix> cols;
  for (const auto& fi : fs)
    for (const auto& gt : gs) cols.push_back(compose(gt, fi).total().vectorize());
  Matrix sys = Matrix::hstack(cols, f, n * n);
  auto sol = linalg::solve(sys, Matrix::identity(f, n).vectorize());
  if (!sol) return std::nullopt;
  const std::size_t k = fs.size();
  DirectSum ck = direct_sum(std::vector<Module>(k, c), c.algebra());
  Morphism section = Morphism::zero(x, ck.sum), retraction = Morphism::zero(ck.sum, x);
  for (std::size_t i = 0; i < k; ++i) {
    section = section + compose(ck.injections[i], fs[i]);
    Morphism gi = Morphism::zero(c, x);
    for (std::size_t t = 0; t < gs.size(); ++t) {
      Scalar coef = sol->at(i * gs.size() + t, 0);
      if (!coef.is_zero()) gi = gi + gs[t].scaled(coef);
    }
    retraction = retraction + compose(gi, ck.projections[i]);
  }
  if (!(compose(retraction, section) == Morphism::identity(x))) throw std::logic_error("add witness does not split");
  return AddWitness{k, section, retraction};
}

bool in_add(const Module& x, const Module& c) { return add_witness(x, c).has_value(); }

}  // namespace trigor::algebra

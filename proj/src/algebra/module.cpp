#include <numeric>
#include <sstream>
#include <stdexcept>

#include "trigor/algebra/module.hpp"

namespace trigor::algebra {

std::shared_ptr<Module::Data> Module::build(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps,
                                            std::string* error) {
  auto fail = [&](std::string msg) -> std::shared_ptr<Data> {
    if (error) *error = std::move(msg);
    return nullptr;
  };
  if (!alg) return fail("module without algebra");
  const Field f = alg->field();
  if (static_cast<int>(dims.size()) != alg->num_vertices()) return fail("dimension vector has wrong length");
  if (static_cast<int>(arrow_maps.size()) != alg->num_arrows()) return fail("wrong number of arrow matrices");
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const auto& ar = alg->arrows()[a];
    const auto& m = arrow_maps[a];
    if (!(m.field() == f)) return fail("arrow matrix over the wrong field");
    if (m.rows() != dims[ar.target] || m.cols() != dims[ar.source])
      return fail("arrow '" + ar.label + "' matrix has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                  ", expected " + std::to_string(dims[ar.target]) + "x" + std::to_string(dims[ar.source]));
  }
  auto d = std::make_shared<Data>();
  d->alg = alg;
  d->dims = std::move(dims);
  d->offsets.resize(d->dims.size());
  for (std::size_t v = 0; v < d->dims.size(); ++v) {
    d->offsets[v] = d->total;
    d->total += d->dims[v];
  }
  d->arrows = std::move(arrow_maps);
  const auto& basis = alg->basis();
  d->actions.resize(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& b = basis[i];
    if (b.word.empty()) {
      d->actions[i] = Matrix::identity(f, d->dims[b.source]);
      continue;
    }
    Matrix m = d->arrows[b.word[0]];
    for (std::size_t k = 1; k < b.word.size(); ++k) m = d->arrows[b.word[k]] * m;
    d->actions[i] = std::move(m);
  }
  // rho(a) rho(b) must equal rho(a * b) for every arrow a and basis element b.
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const int ai = alg->arrow_element(a);
    const auto& ar = alg->arrows()[a];
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& b = basis[i];
      if (b.target != ar.source || b.word.empty()) continue;
      const auto& prod = alg->product(ai, static_cast<int>(i));
      if (prod.size() == 1 && prod[0].coeff.is_one()) {
        const auto& w = basis[prod[0].index].word;
        if (w.size() == b.word.size() + 1 && std::equal(b.word.begin(), b.word.end(), w.begin()) && w.back() == a) continue;
      }
      if (d->dims[ar.target] == 0 || d->dims[b.source] == 0) continue;
      Matrix lhs = d->arrows[a] * d->actions[i];
      Matrix rhs(f, d->dims[ar.target], d->dims[b.source]);
      for (const auto& t : prod) rhs.add_block(0, 0, d->actions[t.index], t.coeff);
      if (!(lhs == rhs))
        return fail("relation violated: " + ar.label + " * (" + alg->basis_label(static_cast<int>(i)) + ") = " +
                    alg->element_to_string(prod) + " fails on the representation");
    }
  }
  return d;
}

Module::Module(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps) {
  std::string err;
  auto d = build(std::move(alg), std::move(dims), std::move(arrow_maps), &err);
  if (!d) throw std::invalid_argument("invalid module: " + err);
  d_ = d;
}

std::optional<Module> Module::try_make(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps) {
  auto d = build(std::move(alg), std::move(dims), std::move(arrow_maps), nullptr);
  if (!d) return std::nullopt;
  Module m;
  m.d_ = d;
  return m;
}

Module Module::zero(AlgebraPtr alg) {
  std::vector<Matrix> maps;
  for (const auto& a : alg->arrows()) {
    (void)a;
    maps.emplace_back(alg->field(), 0, 0);
  }
  return Module(alg, std::vector<std::size_t>(alg->num_vertices(), 0), maps);
}

Matrix Module::element_action(const Element& e) const {
  Matrix m(field(), total_dim(), total_dim());
  for (const auto& t : e) {
    const auto& b = algebra()->basis()[t.index];
    m.add_block(offset(b.target), offset(b.source), action(t.index), t.coeff);
  }
  return m;
}

bool Module::operator==(const Module& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  if (!(d_->alg == o.d_->alg || d_->alg->same_as(*o.d_->alg))) return false;
  return d_->dims == o.d_->dims && d_->arrows == o.d_->arrows;
}

std::string Module::describe() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t v = 0; v < dims().size(); ++v) os << (v ? "," : "") << dims()[v];
  os << ")";
  for (int a = 0; a < algebra()->num_arrows(); ++a)
    if (!arrow_map(a).empty()) os << " " << algebra()->arrows()[a].label << "=" << arrow_map(a).to_string();
  return os.str();
}

// ---------------------------------------------------------------------------

Morphism::Morphism(Module source, Module target, std::vector<Matrix> maps)
    : src_(std::move(source)), tgt_(std::move(target)), maps_(std::move(maps)) {
  require_same_algebra(src_.algebra(), tgt_.algebra(), "Morphism");
  if (static_cast<int>(maps_.size()) != src_.algebra()->num_vertices())
    throw std::invalid_argument("morphism needs one matrix per vertex");
  for (std::size_t v = 0; v < maps_.size(); ++v)
    if (maps_[v].rows() != tgt_.dim(static_cast<int>(v)) || maps_[v].cols() != src_.dim(static_cast<int>(v)))
      throw std::invalid_argument("morphism matrix has wrong shape at vertex " + std::to_string(v));
  if (!intertwines()) throw std::invalid_argument("maps do not intertwine the arrow actions");
}

Morphism Morphism::unchecked(Module source, Module target, std::vector<Matrix> maps) {
  Morphism m;
  m.src_ = std::move(source);
  m.tgt_ = std::move(target);
  m.maps_ = std::move(maps);
  return m;
}

Morphism Morphism::zero(const Module& s, const Module& t) {
  std::vector<Matrix> maps;
  for (int v = 0; v < s.algebra()->num_vertices(); ++v) maps.emplace_back(s.field(), t.dim(v), s.dim(v));
  return unchecked(s, t, maps);
}

Morphism Morphism::identity(const Module& m) {
  std::vector<Matrix> maps;
  for (int v = 0; v < m.algebra()->num_vertices(); ++v) maps.push_back(Matrix::identity(m.field(), m.dim(v)));
  return unchecked(m, m, maps);
}

Morphism Morphism::from_total(const Module& s, const Module& t, const Matrix& total, bool check) {
  std::vector<Matrix> maps;
  for (int v = 0; v < s.algebra()->num_vertices(); ++v) maps.push_back(total.block(t.offset(v), s.offset(v), t.dim(v), s.dim(v)));
  if (check) return Morphism(s, t, maps);
  return unchecked(s, t, maps);
}

Matrix Morphism::total() const {
  Matrix m(src_.field(), tgt_.total_dim(), src_.total_dim());
  for (std::size_t v = 0; v < maps_.size(); ++v) m.set_block(tgt_.offset(static_cast<int>(v)), src_.offset(static_cast<int>(v)), maps_[v]);
  return m;
}

bool Morphism::is_zero() const {
  for (const auto& m : maps_)
    if (!m.is_zero()) return false;
  return true;
}

bool Morphism::is_injective() const {
  for (std::size_t v = 0; v < maps_.size(); ++v)
    if (linalg::rank(maps_[v]) != maps_[v].cols()) return false;
  return true;
}

bool Morphism::is_surjective() const {
  for (std::size_t v = 0; v < maps_.size(); ++v)
    if (linalg::rank(maps_[v]) != maps_[v].rows()) return false;
  return true;
}

bool Morphism::is_iso() const { return src_.dims() == tgt_.dims() && is_injective(); }

bool Morphism::intertwines() const {
  const auto& alg = src_.algebra();
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const auto& ar = alg->arrows()[a];
    if (!(tgt_.arrow_map(a) * maps_[ar.source] == maps_[ar.target] * src_.arrow_map(a))) return false;
  }
  return true;
}

Morphism Morphism::operator+(const Morphism& o) const {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < maps_.size(); ++v) maps.push_back(maps_[v] + o.maps_[v]);
  return unchecked(src_, tgt_, maps);
}

Morphism Morphism::operator-(const Morphism& o) const {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < maps_.size(); ++v) maps.push_back(maps_[v] - o.maps_[v]);
  return unchecked(src_, tgt_, maps);
}

Morphism Morphism::scaled(const Scalar& s) const {
  std::vector<Matrix> maps;
  for (const auto& m : maps_) maps.push_back(m.scaled(s));
  return unchecked(src_, tgt_, maps);
}

bool Morphism::operator==(const Morphism& o) const { return src_ == o.src_ && tgt_ == o.tgt_ && maps_ == o.maps_; }

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.target().dims() == g.source().dims())) throw std::invalid_argument("compose: shapes do not match");
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < f.maps().size(); ++v) maps.push_back(g.maps()[v] * f.maps()[v]);
  return Morphism::unchecked(f.source(), g.target(), maps);
}

std::optional<Morphism> inverse(const Morphism& f) {
  std::vector<Matrix> maps;
  for (const auto& m : f.maps()) {
    auto inv = linalg::inverse(m);
    if (!inv) return std::nullopt;
    maps.push_back(*inv);
  }
  return Morphism::unchecked(f.target(), f.source(), maps);
}

// ---------------------------------------------------------------------------

DirectSum direct_sum(const std::vector<Module>& parts, AlgebraPtr alg) {
  const Field f = alg->field();
  const int nv = alg->num_vertices();
  std::vector<std::size_t> dims(nv, 0);
  for (const auto& p : parts) {
    require_same_algebra(alg, p.algebra(), "direct_sum");
    for (int v = 0; v < nv; ++v) dims[v] += p.dim(v);
  }
  std::vector<Matrix> arrows;
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const auto& ar = alg->arrows()[a];
    Matrix m(f, dims[ar.target], dims[ar.source]);
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
      m.set_block(r, c, p.arrow_map(a));
      r += p.dim(ar.target);
      c += p.dim(ar.source);
    }
    arrows.push_back(std::move(m));
  }
  DirectSum ds{Module(alg, dims, arrows), {}, {}};
  std::vector<std::size_t> off(nv, 0);
  for (const auto& p : parts) {
    std::vector<Matrix> inj, proj;
    for (int v = 0; v < nv; ++v) {
      Matrix i(f, dims[v], p.dim(v)), q(f, p.dim(v), dims[v]);
      for (std::size_t k = 0; k < p.dim(v); ++k) {
        i.set(off[v] + k, k, 1);
        q.set(k, off[v] + k, 1);
      }
      inj.push_back(std::move(i));
      proj.push_back(std::move(q));
      off[v] += p.dim(v);
    }
    ds.injections.push_back(Morphism::unchecked(p, ds.sum, inj));
    ds.projections.push_back(Morphism::unchecked(ds.sum, p, proj));
  }
  return ds;
}

Module direct_sum(const Module& a, const Module& b) { return direct_sum({a, b}, a.algebra()).sum; }

Module power(const Module& m, std::size_t k) {
  return direct_sum(std::vector<Module>(k, m), m.algebra()).sum;
}

Morphism block_morphism(const DirectSum& src, const DirectSum& tgt,
                        const std::vector<std::vector<std::optional<Morphism>>>& blocks) {
  Morphism out = Morphism::zero(src.sum, tgt.sum);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks[i].size(); ++j)
      if (blocks[i][j]) out = out + compose(tgt.injections[i], compose(*blocks[i][j], src.projections[j]));
  return out;
}

// ---------------------------------------------------------------------------

Module simple(AlgebraPtr alg, int v) {
  std::vector<std::size_t> dims(alg->num_vertices(), 0);
  dims[v] = 1;
  std::vector<Matrix> maps;
  for (const auto& a : alg->arrows()) maps.emplace_back(alg->field(), dims[a.target], dims[a.source]);
  return Module(alg, dims, maps);
}

std::vector<Module> simples(AlgebraPtr alg) {
  std::vector<Module> out;
  for (int v = 0; v < alg->num_vertices(); ++v) out.push_back(simple(alg, v));
  return out;
}

Module projective(AlgebraPtr alg, int v) {
  const int nv = alg->num_vertices();
  const auto& basis = alg->basis();
  std::vector<std::vector<int>> at(nv);
  std::vector<int> pos(basis.size(), -1);
  for (int i = 0; i < alg->dim(); ++i)
    if (basis[i].source == v) {
      pos[i] = static_cast<int>(at[basis[i].target].size());
      at[basis[i].target].push_back(i);
    }
  std::vector<std::size_t> dims(nv);
  for (int w = 0; w < nv; ++w) dims[w] = at[w].size();
  std::vector<Matrix> maps;
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const auto& ar = alg->arrows()[a];
    Matrix m(alg->field(), dims[ar.target], dims[ar.source]);
    for (std::size_t c = 0; c < at[ar.source].size(); ++c)
      for (const auto& t : alg->product(alg->arrow_element(a), at[ar.source][c])) m.set(pos[t.index], c, t.coeff);
    maps.push_back(std::move(m));
  }
  return Module(alg, dims, maps);
}

std::vector<Module> projective_indecomposables(AlgebraPtr alg) {
  std::vector<Module> out;
  for (int v = 0; v < alg->num_vertices(); ++v) out.push_back(projective(alg, v));
  return out;
}

Module regular(AlgebraPtr alg) { return direct_sum(projective_indecomposables(alg), alg).sum; }

Module dual(const Module& m) {
  AlgebraPtr op = m.algebra()->opposite();
  std::vector<Matrix> maps;
  for (int a = 0; a < op->num_arrows(); ++a) maps.push_back(m.arrow_map(a).transpose());
  return Module(op, m.dims(), maps);
}

Morphism dual(const Morphism& f) {
  std::vector<Matrix> maps;
  for (const auto& x : f.maps()) maps.push_back(x.transpose());
  return Morphism::unchecked(dual(f.target()), dual(f.source()), maps);
}

Module injective(AlgebraPtr alg, int v) { return dual(projective(alg->opposite(), v)); }

std::vector<Module> injective_indecomposables(AlgebraPtr alg) {
  std::vector<Module> out;
  for (int v = 0; v < alg->num_vertices(); ++v) out.push_back(injective(alg, v));
  return out;
}

std::vector<std::size_t> top_dims(const Module& m) { return top(m).module.dims(); }

bool is_projective(const Module& m) {
  auto t = top_dims(m);
  std::size_t expect = 0;
  for (int v = 0; v < m.algebra()->num_vertices(); ++v)
    if (t[v]) expect += t[v] * projective(m.algebra(), v).total_dim();
  return expect == m.total_dim();
}

bool is_injective(const Module& m) { return is_projective(dual(m)); }

Module transport(const Module& m, const std::vector<Matrix>& g) {
  const auto& alg = m.algebra();
  std::vector<Matrix> maps;
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const auto& ar = alg->arrows()[a];
    auto inv = linalg::inverse(g[ar.source]);
    if (!inv) throw std::invalid_argument("transport: singular base change");
    maps.push_back(g[ar.target] * m.arrow_map(a) * *inv);
  }
  return Module(alg, m.dims(), maps);
}

}  // namespace trigor::algebra

#include <stdexcept>

#include "trigor/algebra/bimodule.hpp"

namespace trigor::algebra {

namespace {

Matrix element_matrix(const Element& e, const std::vector<Matrix>& mats, Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (const auto& t : e) m.add_block(0, 0, mats[t.index], t.coeff);
  return m;
}

std::vector<std::size_t> indices_where(const std::vector<int>& labels, int v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == v) out.push_back(i);
  return out;
}

Matrix left_multiplication(const Algebra& a, int i) {
  Matrix m(a.field(), a.dim(), a.dim());
  for (int j = 0; j < a.dim(); ++j)
    for (const auto& t : a.product(i, j)) m.set(t.index, j, t.coeff);
  return m;
}

}  // namespace

Bimodule Bimodule::make(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Matrix> left_action,
                        std::vector<Matrix> right_action) {
  const Field f = left->field();
  if (!(right->field() == f)) throw linalg::FieldMismatch("bimodule algebras over different fields");
  if (static_cast<int>(left_action.size()) != left->dim() || static_cast<int>(right_action.size()) != right->dim())
    throw std::invalid_argument("invalid bimodule: need one action matrix per basis element");
  for (const auto* acts : {&left_action, &right_action})
    for (const auto& m : *acts)
      if (m.rows() != dim || m.cols() != dim || !(m.field() == f))
        throw std::invalid_argument("invalid bimodule: action matrix of wrong shape");
  const Matrix id = Matrix::identity(f, dim);
  Matrix sum(f, dim, dim);
  for (int v = 0; v < left->num_vertices(); ++v) sum = sum + left_action[left->idempotent(v)];
  if (!(sum == id)) throw std::invalid_argument("invalid bimodule: left idempotents do not sum to 1");
  sum = Matrix(f, dim, dim);
  for (int v = 0; v < right->num_vertices(); ++v) sum = sum + right_action[right->idempotent(v)];
  if (!(sum == id)) throw std::invalid_argument("invalid bimodule: right idempotents do not sum to 1");
  for (int i = 0; i < left->dim(); ++i)
    for (int j = 0; j < left->dim(); ++j)
      if (!(left_action[i] * left_action[j] == element_matrix(left->product(i, j), left_action, f, dim)))
        throw std::invalid_argument("invalid bimodule: left action is not multiplicative at (" + left->basis_label(i) +
                                    ", " + left->basis_label(j) + ")");
  for (int i = 0; i < right->dim(); ++i)
    for (int j = 0; j < right->dim(); ++j)
      if (!(right_action[j] * right_action[i] == element_matrix(right->product(i, j), right_action, f, dim)))
        throw std::invalid_argument("invalid bimodule: right action is not multiplicative at (" + right->basis_label(i) +
                                    ", " + right->basis_label(j) + ")");
  for (const auto& l : left_action)
    for (const auto& r : right_action)
      if (!(l * r == r * l)) throw std::invalid_argument("invalid bimodule: left and right actions do not commute");

  Bimodule u;
  u.left_alg_ = std::move(left);
  u.right_alg_ = std::move(right);
  u.dim_ = dim;
  std::vector<Matrix> blocks;
  for (int w = 0; w < u.left_alg_->num_vertices(); ++w)
    for (int v = 0; v < u.right_alg_->num_vertices(); ++v) {
      Matrix b = linalg::image_basis(left_action[u.left_alg_->idempotent(w)] * right_action[u.right_alg_->idempotent(v)]);
      for (std::size_t k = 0; k < b.cols(); ++k) {
        u.lv_.push_back(w);
        u.rv_.push_back(v);
      }
      blocks.push_back(std::move(b));
    }
  u.basis_change_ = Matrix::hstack(blocks, f, dim);
  auto inv = linalg::inverse(u.basis_change_);
  if (!inv) throw std::logic_error("bimodule idempotent blocks do not span");
  for (const auto& l : left_action) u.left_.push_back(*inv * l * u.basis_change_);
  for (const auto& r : right_action) u.right_.push_back(*inv * r * u.basis_change_);
  return u;
}

Bimodule Bimodule::regular(AlgebraPtr a) {
  const Field f = a->field();
  const auto n = static_cast<std::size_t>(a->dim());
  std::vector<Matrix> left, right;
  for (int i = 0; i < a->dim(); ++i) left.push_back(left_multiplication(*a, i));
  for (int j = 0; j < a->dim(); ++j) {
    Matrix r(f, n, n);
    for (int i = 0; i < a->dim(); ++i)
      for (const auto& t : a->product(i, j)) r.set(t.index, i, t.coeff);
    right.push_back(std::move(r));
  }
  return make(a, a, n, left, right);
}

Bimodule Bimodule::zero(AlgebraPtr left, AlgebraPtr right) {
  const Field f = left->field();
  return make(left, right, 0, std::vector<Matrix>(left->dim(), Matrix(f, 0, 0)),
              std::vector<Matrix>(right->dim(), Matrix(f, 0, 0)));
}

Bimodule Bimodule::from_morphism(AlgebraPtr s, AlgebraPtr r, const Matrix& theta) {
  const Field f = s->field();
  const auto n = static_cast<std::size_t>(s->dim());
  if (theta.rows() != n || theta.cols() != static_cast<std::size_t>(r->dim()))
    throw std::invalid_argument("algebra morphism matrix has wrong shape");
  std::vector<Matrix> left, right;
  for (int i = 0; i < s->dim(); ++i) left.push_back(left_multiplication(*s, i));
  for (int j = 0; j < r->dim(); ++j) {
    // u . theta(r_j)
    Matrix m(f, n, n);
    for (std::size_t k = 0; k < n; ++k) {
      if (theta.entry_is_zero(k, j)) continue;
      Scalar c = theta.at(k, j);
      for (int i = 0; i < s->dim(); ++i)
        for (const auto& t : s->product(i, static_cast<int>(k))) m.add_scaled_entry(t.index, i, c * t.coeff);
    }
    right.push_back(std::move(m));
  }
  return make(s, r, n, left, right);
}

Module Bimodule::as_left_module() const {
  const auto& b = *left_alg_;
  std::vector<std::vector<std::size_t>> idx(b.num_vertices());
  std::vector<std::size_t> dims;
  for (int w = 0; w < b.num_vertices(); ++w) {
    idx[w] = indices_where(lv_, w);
    dims.push_back(idx[w].size());
  }
  std::vector<Matrix> maps;
  for (int a = 0; a < b.num_arrows(); ++a) {
    const auto& ar = b.arrows()[a];
    maps.push_back(left_[b.arrow_element(a)].select_rows(idx[ar.target]).select_columns(idx[ar.source]));
  }
  return Module(left_alg_, dims, maps);
}

Module Bimodule::as_right_module() const {
  const auto& a = *right_alg_;
  AlgebraPtr op = a.opposite();
  std::vector<std::vector<std::size_t>> idx(a.num_vertices());
  std::vector<std::size_t> dims;
  for (int v = 0; v < a.num_vertices(); ++v) {
    idx[v] = indices_where(rv_, v);
    dims.push_back(idx[v].size());
  }
  std::vector<Matrix> maps;
  for (int k = 0; k < a.num_arrows(); ++k) {
    const auto& ar = a.arrows()[k];
    // u in U e_t goes to u.alpha in U e_s
    maps.push_back(right_[a.arrow_element(k)].select_rows(idx[ar.source]).select_columns(idx[ar.target]));
  }
  return Module(op, dims, maps);
}

// ---------------------------------------------------------------------------

Tensor tensor_over(const Bimodule& u, const Module& m) {
  require_same_algebra(u.right_algebra(), m.algebra(), "tensor_over");
  const auto& A = *u.right_algebra();
  const auto& B = *u.left_algebra();
  const Field f = u.field();
  const std::size_t mt = m.total_dim(), du = u.dim();
  std::vector<int> mv(mt);
  for (int v = 0; v < A.num_vertices(); ++v)
    for (std::size_t k = 0; k < m.dim(v); ++k) mv[m.offset(v) + k] = v;

  const int nb = B.num_vertices();
  Tensor t;
  t.pairs.resize(nb);
  std::vector<long> pos(du * mt, -1);
  for (std::size_t i = 0; i < du; ++i)
    for (std::size_t j = 0; j < mt; ++j)
      if (mv[j] == u.right_vertex(i)) {
        auto& pw = t.pairs[u.left_vertex(i)];
        pos[i * mt + j] = static_cast<long>(pw.size());
        pw.push_back({i, j});
      }

  std::vector<std::size_t> dims(nb);
  for (int w = 0; w < nb; ++w) {
    const std::size_t np = t.pairs[w].size();
    std::vector<Matrix> rels;
    for (int a = 0; a < A.num_arrows(); ++a) {
      const auto& ar = A.arrows()[a];
      const Matrix& R = u.right(A.arrow_element(a));
      const Matrix& act = m.arrow_map(a);
      for (std::size_t i = 0; i < du; ++i) {
        if (u.left_vertex(i) != w || u.right_vertex(i) != ar.target) continue;
        for (std::size_t js = 0; js < m.dim(ar.source); ++js) {
          const std::size_t j = m.offset(ar.source) + js;
          Matrix col(f, np, 1);
          for (std::size_t k = 0; k < du; ++k)
            if (!R.entry_is_zero(k, i)) col.add_scaled_entry(pos[k * mt + j], 0, R.at(k, i));
          for (std::size_t lt = 0; lt < m.dim(ar.target); ++lt)
            if (!act.entry_is_zero(lt, js)) col.add_scaled_entry(pos[i * mt + m.offset(ar.target) + lt], 0, -act.at(lt, js));
          if (!col.is_zero()) rels.push_back(std::move(col));
        }
      }
    }
    Matrix span = rels.empty() ? Matrix(f, np, 0) : linalg::image_basis(Matrix::hstack(rels, f, np));
    auto q = linalg::quotient_by(span, np);
    dims[w] = q.projection.rows();
    t.projection.push_back(std::move(q.projection));
    t.section.push_back(std::move(q.section));
  }

  std::vector<Matrix> maps;
  for (int b = 0; b < B.num_arrows(); ++b) {
    const auto& ar = B.arrows()[b];
    const Matrix& L = u.left(B.arrow_element(b));
    const auto& src = t.pairs[ar.source];
    Matrix x(f, t.pairs[ar.target].size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      auto [i, j] = src[c];
      for (std::size_t k = 0; k < du; ++k)
        if (!L.entry_is_zero(k, i)) x.add_scaled_entry(pos[k * mt + j], c, L.at(k, i));
    }
    maps.push_back(t.projection[ar.target] * x * t.section[ar.source]);
  }
  t.module = Module(u.left_algebra(), dims, maps);

  t.surjection = Matrix(f, t.module.total_dim(), du * mt);
  for (int w = 0; w < nb; ++w)
    for (std::size_t c = 0; c < t.pairs[w].size(); ++c) {
      auto [i, j] = t.pairs[w][c];
      for (std::size_t r = 0; r < dims[w]; ++r)
        if (!t.projection[w].entry_is_zero(r, c)) t.surjection.set(t.module.offset(w) + r, i * mt + j, t.projection[w].at(r, c));
    }
  return t;
}

Morphism tensor_map(const Bimodule& u, const Morphism& f, const Tensor& src, const Tensor& tgt) {
  const Matrix F = f.total();
  const std::size_t nt = f.target().total_dim();
  std::vector<std::vector<long>> tpos(src.pairs.size());
  std::vector<Matrix> maps;
  for (std::size_t w = 0; w < src.pairs.size(); ++w) {
    std::vector<long> pos(u.dim() * nt, -1);
    for (std::size_t c = 0; c < tgt.pairs[w].size(); ++c) pos[tgt.pairs[w][c].first * nt + tgt.pairs[w][c].second] = static_cast<long>(c);
    Matrix x(u.field(), tgt.pairs[w].size(), src.pairs[w].size());
    for (std::size_t c = 0; c < src.pairs[w].size(); ++c) {
      auto [i, j] = src.pairs[w][c];
      for (std::size_t l = 0; l < nt; ++l)
        if (!F.entry_is_zero(l, j)) x.add_scaled_entry(pos[i * nt + l], c, F.at(l, j));
    }
    maps.push_back(tgt.projection[w] * x * src.section[w]);
  }
  return Morphism(src.module, tgt.module, maps);
}

Morphism tensor_map(const Bimodule& u, const Morphism& f) {
  return tensor_map(u, f, tensor_over(u, f.source()), tensor_over(u, f.target()));
}

// ---------------------------------------------------------------------------

HomFromU hom_from_bimodule(const Bimodule& u, const Module& n) {
  require_same_algebra(u.left_algebra(), n.algebra(), "hom_from_bimodule");
  const auto& A = *u.right_algebra();
  const auto& B = *u.left_algebra();
  const Field f = u.field();
  const std::size_t du = u.dim();
  HomFromU h;
  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix>> vecs(A.num_vertices());
  std::vector<int> rvs;
  for (std::size_t i = 0; i < du; ++i) rvs.push_back(u.right_vertex(i));
  for (int v = 0; v < A.num_vertices(); ++v) {
    auto idx = indices_where(rvs, v);
    std::vector<long> var(du, -1);
    std::size_t nvar = 0;
    for (auto i : idx) {
      var[i] = static_cast<long>(nvar);
      nvar += n.dim(u.left_vertex(i));
    }
    std::vector<Matrix> rows;
    for (int b = 0; b < B.num_arrows(); ++b) {
      const auto& ar = B.arrows()[b];
      const Matrix& L = u.left(B.arrow_element(b));
      const Matrix& nb = n.arrow_map(b);
      for (auto i : idx) {
        if (u.left_vertex(i) != ar.source) continue;
        Matrix eq(f, n.dim(ar.target), nvar);
        for (auto k : idx)
          if (!L.entry_is_zero(k, i))
            for (std::size_t r = 0; r < n.dim(ar.target); ++r) eq.add_scaled_entry(r, var[k] + r, L.at(k, i));
        for (std::size_t r = 0; r < n.dim(ar.target); ++r)
          for (std::size_t c = 0; c < n.dim(ar.source); ++c)
            if (!nb.entry_is_zero(r, c)) eq.add_scaled_entry(r, var[i] + c, -nb.at(r, c));
        rows.push_back(std::move(eq));
      }
    }
    Matrix sys = rows.empty() ? Matrix(f, 0, nvar) : Matrix::vstack(rows, f, nvar);
    Matrix ker = sys.rows() == 0 ? Matrix::identity(f, nvar) : linalg::kernel_basis(sys);
    std::vector<Matrix> gs;
    for (std::size_t k = 0; k < ker.cols(); ++k) {
      Matrix g(f, n.total_dim(), du);
      for (auto i : idx) {
        const int w = u.left_vertex(i);
        for (std::size_t r = 0; r < n.dim(w); ++r)
          if (!ker.entry_is_zero(var[i] + r, k)) g.set(n.offset(w) + r, i, ker.at(var[i] + r, k));
      }
      gs.push_back(std::move(g));
    }
    dims.push_back(gs.size());
    h.maps.push_back(std::move(gs));
  }
  for (int v = 0; v < A.num_vertices(); ++v) {
    std::vector<Matrix> cols;
    for (const auto& g : h.maps[v]) cols.push_back(g.vectorize());
    vecs[v].push_back(Matrix::hstack(cols, f, n.total_dim() * du));
  }
  std::vector<Matrix> arrows;
  for (int a = 0; a < A.num_arrows(); ++a) {
    const auto& ar = A.arrows()[a];
    const Matrix& R = u.right(A.arrow_element(a));
    Matrix x(f, dims[ar.target], dims[ar.source]);
    for (std::size_t k = 0; k < dims[ar.source]; ++k) {
      auto c = linalg::solve(vecs[ar.target][0], (h.maps[ar.source][k] * R).vectorize());
      if (!c) throw std::logic_error("Hom_B(U,N) is not closed under the A-action");
      x.set_block(0, k, *c);
    }
    arrows.push_back(std::move(x));
  }
  h.module = Module(u.right_algebra(), dims, arrows);
  return h;
}

Morphism hom_from_bimodule_map(const Bimodule& u, const Morphism& f, const HomFromU& src, const HomFromU& tgt) {
  const Matrix F = f.total();
  const Field fl = u.field();
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < src.maps.size(); ++v) {
    std::vector<Matrix> cols;
    for (const auto& g : tgt.maps[v]) cols.push_back(g.vectorize());
    Matrix basis = Matrix::hstack(cols, fl, f.target().total_dim() * u.dim());
    Matrix x(fl, tgt.maps[v].size(), src.maps[v].size());
    for (std::size_t k = 0; k < src.maps[v].size(); ++k) {
      auto c = linalg::solve(basis, (F * src.maps[v][k]).vectorize());
      if (!c) throw std::logic_error("Hom_B(U,f) leaves the target Hom space");
      x.set_block(0, k, *c);
    }
    maps.push_back(std::move(x));
  }
  return Morphism(src.module, tgt.module, maps);
}

Morphism evaluation(const Bimodule& u, const HomFromU& h, const Tensor& t, const Module& n) {
  const Module& hm = h.module;
  std::vector<int> hv(hm.total_dim());
  for (int v = 0; v < hm.algebra()->num_vertices(); ++v)
    for (std::size_t k = 0; k < hm.dim(v); ++k) hv[hm.offset(v) + k] = v;
  std::vector<Matrix> maps;
  for (int w = 0; w < n.algebra()->num_vertices(); ++w) {
    Matrix e(u.field(), n.dim(w), t.pairs[w].size());
    for (std::size_t c = 0; c < t.pairs[w].size(); ++c) {
      auto [i, j] = t.pairs[w][c];
      const int v = hv[j];
      const Matrix& g = h.maps[v][j - hm.offset(v)];
      for (std::size_t r = 0; r < n.dim(w); ++r)
        if (!g.entry_is_zero(n.offset(w) + r, i)) e.set(r, c, g.at(n.offset(w) + r, i));
    }
    maps.push_back(e * t.section[w]);
  }
  return Morphism(t.module, n, maps);
}

}  // namespace trigor::algebra

#include "trigor/algebra/algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace trigor::algebra {

namespace {

constexpr int kMaxNilpotencyDegree = 24;

std::mutex& opposite_mutex() {
  static std::mutex m;
  return m;
}

Element to_sparse(const std::vector<Scalar>& dense) {
  Element e;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) e.push_back({static_cast<int>(i), dense[i]});
  return e;
}

Element column_to_element(const Matrix& m, std::size_t col) {
  Element e;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m.entry_is_zero(i, col)) e.push_back({static_cast<int>(i), m.at(i, col)});
  return e;
}

struct Path {
  int source;
  int target;
  std::vector<int> word;
};

bool path_less(const Path& a, const Path& b) {
  if (a.word.size() != b.word.size()) return a.word.size() > b.word.size();
  if (a.source != b.source) return a.source < b.source;
  if (a.target != b.target) return a.target < b.target;
  return a.word < b.word;
}

void fnv(std::uint64_t& h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= 1099511628211ull;
  }
}

void fnv(std::uint64_t& h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  fnv(h, s.size());
}

}  // namespace

Element make_element(Field f, std::vector<std::pair<int, long long>> terms) {
  std::map<int, Scalar> acc;
  for (auto [i, c] : terms) {
    auto it = acc.find(i);
    if (it == acc.end())
      acc.emplace(i, Scalar(f, c));
    else
      it->second += Scalar(f, c);
  }
  Element e;
  for (auto& [i, c] : acc)
    if (!c.is_zero()) e.push_back({i, c});
  return e;
}

Element scale(const Element& e, const Scalar& s) {
  Element out;
  if (s.is_zero()) return out;
  for (const auto& t : e) out.push_back({t.index, t.coeff * s});
  return out;
}

Element add(const Element& a, const Element& b) {
  Element out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      out.push_back(b[j++]);
    } else {
      Scalar c = a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].index, c});
      ++i;
      ++j;
    }
  }
  return out;
}

AlgebraPtr Algebra::from_quiver(Field f, std::vector<std::string> vertices, std::vector<Arrow> arrows,
                                std::vector<Relation> relations, std::string name) {
  const int nv = static_cast<int>(vertices.size());
  if (nv == 0) throw std::invalid_argument("algebra needs at least one vertex");
  for (const auto& a : arrows)
    if (a.source < 0 || a.source >= nv || a.target < 0 || a.target >= nv)
      throw std::invalid_argument("arrow '" + a.label + "' has an endpoint outside the vertex list");

  std::vector<std::pair<int, int>> rel_ends;
  for (const auto& r : relations) {
    if (r.empty()) throw std::invalid_argument("empty relation");
    int s = -1, t = -1;
    for (const auto& term : r) {
      require_same_field(f, term.coeff.field());
      if (term.word.size() < 2)
        throw std::invalid_argument("relation term of length < 2: relations must lie in the square of the arrow ideal");
      for (int a : term.word)
        if (a < 0 || a >= static_cast<int>(arrows.size())) throw std::invalid_argument("relation uses unknown arrow");
      for (std::size_t k = 0; k + 1 < term.word.size(); ++k)
        if (arrows[term.word[k]].target != arrows[term.word[k + 1]].source)
          throw std::invalid_argument("relation term is not a path");
      int ts = arrows[term.word.front()].source, tt = arrows[term.word.back()].target;
      if (s < 0) {
        s = ts;
        t = tt;
      } else if (s != ts || t != tt) {
        throw std::invalid_argument("relation terms are not parallel");
      }
    }
    rel_ends.push_back({s, t});
  }

  // Paths by length, extended lazily.
  std::vector<std::vector<Path>> by_len(1);
  for (int v = 0; v < nv; ++v) by_len[0].push_back({v, v, {}});
  auto extend_to = [&](std::size_t L) {
    while (by_len.size() <= L) {
      std::vector<Path> next;
      for (const auto& p : by_len.back())
        for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
          if (arrows[a].source == p.target) {
            Path q = p;
            q.word.push_back(a);
            q.target = arrows[a].target;
            next.push_back(std::move(q));
          }
      by_len.push_back(std::move(next));
    }
  };

  // Generators p*r*q of the ideal truncated to paths of length <= D.
  auto ideal_vectors = [&](std::size_t D, const std::map<std::vector<int>, std::size_t>& col,
                           const std::vector<Path>& paths) {
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t ri = 0; ri < relations.size(); ++ri) {
      std::size_t minlen = SIZE_MAX;
      for (const auto& term : relations[ri]) minlen = std::min(minlen, term.word.size());
      if (minlen > D) continue;
      std::size_t slack = D - minlen;
      for (std::size_t lq = 0; lq <= slack; ++lq)
        for (const auto& q : by_len[lq]) {
          if (q.target != rel_ends[ri].first) continue;
          for (std::size_t lp = 0; lp + lq <= slack; ++lp)
            for (const auto& p : by_len[lp]) {
              if (p.source != rel_ends[ri].second) continue;
              std::vector<Scalar> row(paths.size(), Scalar::zero(f));
              bool any = false;
              for (const auto& term : relations[ri]) {
                std::vector<int> w = q.word;
                w.insert(w.end(), term.word.begin(), term.word.end());
                w.insert(w.end(), p.word.begin(), p.word.end());
                if (w.size() > D) continue;
                auto it = col.find(w);
                row[it->second] += term.coeff;
                any = true;
              }
              if (any) rows.push_back(std::move(row));
            }
        }
    }
    return rows;
  };

  std::size_t D = 1;
  std::vector<Path> paths;
  std::map<std::vector<int>, std::size_t> col;
  Matrix W;
  for (;; ++D) {
    if (D > kMaxNilpotencyDegree)
      throw std::invalid_argument("relations are not admissible: arrow ideal not nilpotent modulo relations up to degree " +
                                  std::to_string(kMaxNilpotencyDegree));
    extend_to(D);
    paths.clear();
    for (std::size_t L = 0; L <= D; ++L)
      for (const auto& p : by_len[L]) paths.push_back(p);
    std::sort(paths.begin(), paths.end(), path_less);
    col.clear();
    // Vertex paths share the empty word; key them by a sentinel.
    for (std::size_t i = 0; i < paths.size(); ++i) {
      std::vector<int> key = paths[i].word;
      if (key.empty()) key = {-1 - paths[i].source};
      col[key] = i;
    }
    auto rows = ideal_vectors(D, col, paths);
    W = Matrix(f, rows.size(), paths.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < paths.size(); ++c)
        if (!rows[r][c].is_zero()) W.set(r, c, rows[r][c]);
    // Degree-D paths occupy the leading columns after sorting.
    std::size_t top = by_len[D].size();
    Matrix top_unit(f, top, paths.size());
    for (std::size_t i = 0; i < top; ++i) top_unit.set(i, i, 1);
    if (top == 0 || linalg::rank(Matrix::vstack(W, top_unit)) == linalg::rank(W)) break;
  }

  // Work modulo the length-D paths: drop them.
  std::size_t top = by_len[D].size();
  std::vector<std::size_t> keep;
  for (std::size_t i = top; i < paths.size(); ++i) keep.push_back(i);
  Matrix Wlow = W.select_columns(keep);
  std::vector<Path> low;
  for (auto i : keep) low.push_back(paths[i]);

  linalg::Echelon e = linalg::rref(Wlow);
  std::vector<bool> is_pivot(low.size(), false);
  std::vector<int> pivot_row(low.size(), -1);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    is_pivot[e.pivots[r]] = true;
    pivot_row[e.pivots[r]] = static_cast<int>(r);
  }

  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->name_ = std::move(name);
  alg->field_ = f;
  alg->vertices_ = std::move(vertices);
  alg->arrows_ = std::move(arrows);
  alg->relations_ = std::move(relations);

  std::vector<std::size_t> basis_cols;
  for (std::size_t i = 0; i < low.size(); ++i)
    if (!is_pivot[i]) basis_cols.push_back(i);
  std::sort(basis_cols.begin(), basis_cols.end(), [&](std::size_t a, std::size_t b) {
    const Path &x = low[a], &y = low[b];
    if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
    if (x.source != y.source) return x.source < y.source;
    if (x.target != y.target) return x.target < y.target;
    return x.word < y.word;
  });
  std::vector<int> basis_of_col(low.size(), -1);
  for (std::size_t k = 0; k < basis_cols.size(); ++k) {
    basis_of_col[basis_cols[k]] = static_cast<int>(k);
    const Path& p = low[basis_cols[k]];
    alg->basis_.push_back({p.source, p.target, p.word});
  }

  std::map<std::vector<int>, Element> reduced;
  for (std::size_t c = 0; c < low.size(); ++c) {
    if (low[c].word.empty()) continue;
    Element el;
    if (!is_pivot[c]) {
      el.push_back({basis_of_col[c], Scalar::one(f)});
    } else {
      std::vector<Scalar> dense(basis_cols.size(), Scalar::zero(f));
      int r = pivot_row[c];
      for (std::size_t k = 0; k < low.size(); ++k)
        if (!is_pivot[k] && !e.reduced.entry_is_zero(r, k)) dense[basis_of_col[k]] -= e.reduced.at(r, k);
      el = to_sparse(dense);
    }
    reduced[low[c].word] = el;
  }

  const std::size_t n = alg->basis_.size();
  alg->product_.assign(n * n, Element{});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto &bi = alg->basis_[i], &bj = alg->basis_[j];
      if (bi.source != bj.target) continue;
      if (bi.word.empty()) {
        alg->product_[i * n + j] = {{static_cast<int>(j), Scalar::one(f)}};
      } else if (bj.word.empty()) {
        alg->product_[i * n + j] = {{static_cast<int>(i), Scalar::one(f)}};
      } else {
        std::vector<int> w = bj.word;
        w.insert(w.end(), bi.word.begin(), bi.word.end());
        auto it = reduced.find(w);
        if (it != reduced.end()) alg->product_[i * n + j] = it->second;
      }
    }
  alg->finish();
  alg->validate();
  return alg;
}

Algebra::Presented Algebra::from_structure(const Structure& s, std::string name) {
  const Field f = s.field;
  const std::size_t n = s.source.size();
  const int nv = static_cast<int>(s.vertices.size());
  if (s.target.size() != n || s.product.size() != n * n || s.idempotents.size() != s.vertices.size())
    throw std::invalid_argument("from_structure: inconsistent sizes");
  std::vector<bool> is_idem(n, false);
  for (int v = 0; v < nv; ++v) is_idem[s.idempotents[v]] = true;

  auto mult = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    std::vector<Scalar> out(n, Scalar::zero(f));
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j].is_zero()) continue;
        Scalar c = x[i] * y[j];
        for (const auto& t : s.product[i * n + j]) out[t.index] += c * t.coeff;
      }
    }
    return out;
  };
  auto unit = [&](std::size_t i) {
    std::vector<Scalar> v(n, Scalar::zero(f));
    v[i] = Scalar::one(f);
    return v;
  };
  auto as_column = [&](const std::vector<Scalar>& v) { return Matrix::column(v, f); };

  // Arrows: per block, basis elements independent modulo rad^2.
  std::vector<std::vector<Scalar>> rad2;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_idem[i] && !is_idem[j] && !s.product[i * n + j].empty()) rad2.push_back(mult(unit(i), unit(j)));
  Matrix R2(f, n, 0);
  for (const auto& v : rad2) R2 = Matrix::hstack(R2, as_column(v));

  std::vector<Arrow> arrows;
  std::vector<std::vector<Scalar>> arrow_vec;
  for (int w = 0; w < nv; ++w)
    for (int v = 0; v < nv; ++v) {
      Matrix span = R2;
      for (std::size_t i = 0; i < n; ++i) {
        if (is_idem[i] || s.source[i] != v || s.target[i] != w) continue;
        Matrix c = as_column(unit(i));
        if (linalg::column_space_contains(span, c)) continue;
        span = Matrix::hstack(span, c);
        arrows.push_back({v, w, i < s.labels.size() ? s.labels[i] : "b" + std::to_string(i)});
        arrow_vec.push_back(unit(i));
      }
    }

  struct Kept {
    int source, target;
    std::vector<int> word;
    std::vector<Scalar> vec;
  };
  std::vector<Kept> kept;
  Matrix span(f, n, 0);
  for (int v = 0; v < nv; ++v) {
    kept.push_back({v, v, {}, unit(s.idempotents[v])});
    span = Matrix::hstack(span, as_column(kept.back().vec));
  }
  std::vector<std::size_t> frontier;
  for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
    Matrix c = as_column(arrow_vec[a]);
    if (linalg::column_space_contains(span, c)) throw std::logic_error("from_structure: arrow dependent on idempotents");
    span = Matrix::hstack(span, c);
    kept.push_back({arrows[a].source, arrows[a].target, {a}, arrow_vec[a]});
    frontier.push_back(kept.size() - 1);
  }
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto k : frontier)
      for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
        if (arrows[a].source != kept[k].target) continue;
        auto vec = mult(arrow_vec[a], kept[k].vec);
        Matrix c = as_column(vec);
        if (c.is_zero() || linalg::column_space_contains(span, c)) continue;
        span = Matrix::hstack(span, c);
        std::vector<int> w = kept[k].word;
        w.push_back(a);
        kept.push_back({kept[k].source, arrows[a].target, w, vec});
        next.push_back(kept.size() - 1);
      }
    frontier = std::move(next);
  }
  if (kept.size() != n) throw std::invalid_argument("from_structure: arrows do not generate the algebra (not basic/admissible)");

  Matrix new_to_old(f, n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (!kept[k].vec[i].is_zero()) new_to_old.set(i, k, kept[k].vec[i]);
  auto old_to_new = linalg::inverse(new_to_old);
  if (!old_to_new) throw std::logic_error("from_structure: basis change singular");

  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->name_ = std::move(name);
  alg->field_ = f;
  alg->vertices_ = s.vertices;
  alg->arrows_ = arrows;
  for (const auto& k : kept) alg->basis_.push_back({k.source, k.target, k.word});
  alg->product_.assign(n * n, Element{});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (kept[i].source != kept[j].target) continue;
      Matrix prod = as_column(mult(kept[i].vec, kept[j].vec));
      alg->product_[i * n + j] = column_to_element(*old_to_new * prod, 0);
    }
  alg->finish();
  alg->validate();
  return Presented{alg, *old_to_new, new_to_old};
}

void Algebra::finish() {
  const int nv = num_vertices();
  idempotent_.assign(nv, -1);
  arrow_element_.assign(arrows_.size(), -1);
  for (int i = 0; i < dim(); ++i) {
    const auto& b = basis_[i];
    if (b.word.empty()) idempotent_[b.source] = i;
    if (b.word.size() == 1) arrow_element_[b.word[0]] = i;
  }
  for (int v = 0; v < nv; ++v)
    if (idempotent_[v] < 0) throw std::logic_error("missing vertex idempotent");
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrow_element_[a] < 0) throw std::invalid_argument("arrow '" + arrows_[a].label + "' vanishes in the algebra");

  std::uint64_t h = 1469598103934665603ull;
  fnv(h, field_.p);
  fnv(h, vertices_.size());
  for (const auto& a : arrows_) {
    fnv(h, a.source);
    fnv(h, a.target);
  }
  for (const auto& b : basis_) {
    fnv(h, b.source);
    fnv(h, b.target);
    fnv(h, b.word.size());
    for (int x : b.word) fnv(h, x);
  }
  for (const auto& e : product_) {
    fnv(h, e.size());
    for (const auto& t : e) {
      fnv(h, t.index);
      fnv(h, t.coeff.to_string());
    }
  }
  fingerprint_ = h;
}

Element Algebra::reduce_word(const std::vector<int>& word) const {
  if (word.empty()) throw std::invalid_argument("reduce_word: empty word is ambiguous; use idempotent(v)");
  Element e{{arrow_element_.at(word[0]), Scalar::one(field_)}};
  for (std::size_t k = 1; k < word.size(); ++k) {
    if (arrows_.at(word[k]).source != arrows_[word[k - 1]].target) return {};
    e = multiply({{arrow_element_[word[k]], Scalar::one(field_)}}, e);
  }
  return e;
}

Element Algebra::multiply(const Element& x, const Element& y) const {
  std::vector<Scalar> acc(basis_.size(), Scalar::zero(field_));
  bool any = false;
  for (const auto& a : x)
    for (const auto& b : y) {
      const auto& pr = product(a.index, b.index);
      if (pr.empty()) continue;
      Scalar c = a.coeff * b.coeff;
      for (const auto& t : pr) acc[t.index] += c * t.coeff;
      any = true;
    }
  return any ? to_sparse(acc) : Element{};
}

std::string Algebra::basis_label(int i) const {
  const auto& b = basis_[i];
  if (b.word.empty()) return "e" + vertices_[b.source];
  std::string s;
  for (auto it = b.word.rbegin(); it != b.word.rend(); ++it) s += (s.empty() ? "" : "*") + arrows_[*it].label;
  return s;
}

std::string Algebra::element_to_string(const Element& e) const {
  if (e.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (k) os << " + ";
    if (!e[k].coeff.is_one()) os << e[k].coeff.to_string() << "*";
    os << basis_label(e[k].index);
  }
  return os.str();
}

AlgebraPtr Algebra::opposite() const {
  std::lock_guard<std::mutex> lock(opposite_mutex());
  if (opposite_strong_) return opposite_strong_;
  if (auto p = opposite_.lock()) return p;
  auto op = std::shared_ptr<Algebra>(new Algebra());
  op->name_ = name_.empty() ? "" : name_ + "^op";
  op->field_ = field_;
  op->vertices_ = vertices_;
  for (const auto& a : arrows_) op->arrows_.push_back({a.target, a.source, a.label + "'"});
  for (const auto& r : relations_) {
    Relation rr;
    for (const auto& t : r) rr.push_back({std::vector<int>(t.word.rbegin(), t.word.rend()), t.coeff});
    op->relations_.push_back(rr);
  }
  for (const auto& b : basis_) op->basis_.push_back({b.target, b.source, std::vector<int>(b.word.rbegin(), b.word.rend())});
  const std::size_t n = basis_.size();
  op->product_.assign(n * n, Element{});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) op->product_[i * n + j] = product_[j * n + i];
  op->finish();
  op->opposite_ = shared_from_this();
  opposite_strong_ = op;
  return op;
}

bool Algebra::same_as(const Algebra& o) const {
  if (this == &o) return true;
  if (fingerprint_ != o.fingerprint_ || !(field_ == o.field_) || vertices_.size() != o.vertices_.size() ||
      arrows_.size() != o.arrows_.size() || basis_.size() != o.basis_.size())
    return false;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].source != o.arrows_[a].source || arrows_[a].target != o.arrows_[a].target) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].word != o.basis_[i].word || basis_[i].source != o.basis_[i].source) return false;
  for (std::size_t k = 0; k < product_.size(); ++k) {
    if (product_[k].size() != o.product_[k].size()) return false;
    for (std::size_t t = 0; t < product_[k].size(); ++t)
      if (product_[k][t].index != o.product_[k][t].index || !(product_[k][t].coeff == o.product_[k][t].coeff)) return false;
  }
  return true;
}

void Algebra::validate() const {
  const int n = dim();
  const int nv = num_vertices();
  auto unit = [&](int i) { return Element{{i, Scalar::one(field_)}}; };
  auto equal = [](const Element& a, const Element& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k].index != b[k].index || !(a[k].coeff == b[k].coeff)) return false;
    return true;
  };
  for (int v = 0; v < nv; ++v)
    for (int i = 0; i < n; ++i) {
      const auto& b = basis_[i];
      Element left = b.target == v ? unit(i) : Element{};
      Element right = b.source == v ? unit(i) : Element{};
      if (!equal(product(idempotent_[v], i), left) || !equal(product(i, idempotent_[v]), right))
        throw std::logic_error("algebra validation: idempotent axioms fail");
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& ij = product(i, j);
      for (int k = 0; k < n; ++k) {
        Element l = multiply(ij, unit(k));
        Element r = multiply(unit(i), product(j, k));
        if (!equal(l, r)) throw std::logic_error("algebra validation: multiplication not associative");
      }
    }
  for (int i = 0; i < n; ++i)
    if (!basis_[i].word.empty() && !equal(reduce_word(basis_[i].word), unit(i)))
      throw std::logic_error("algebra validation: basis word does not evaluate to its element");
  // Arrow ideal nilpotent: products of arrows die after at most dim steps.
  std::vector<Element> layer;
  for (int a = 0; a < num_arrows(); ++a) layer.push_back(unit(arrow_element_[a]));
  for (int step = 0; !layer.empty(); ++step) {
    if (step > n) throw std::invalid_argument("algebra validation: arrow ideal is not nilpotent");
    std::vector<Element> next;
    Matrix span(field_, n, 0);
    for (const auto& x : layer)
      for (int a = 0; a < num_arrows(); ++a) {
        Element y = multiply(unit(arrow_element_[a]), x);
        if (y.empty()) continue;
        Matrix c(field_, n, 1);
        for (const auto& t : y) c.set(t.index, 0, t.coeff);
        if (linalg::column_space_contains(span, c)) continue;
        span = Matrix::hstack(span, c);
        next.push_back(y);
      }
    layer = std::move(next);
  }
}

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b, const char* where) {
  if (a == b) return;
  if (!a || !b || !a->same_as(*b)) throw std::invalid_argument(std::string("algebra mismatch in ") + where);
}

AlgebraPtr path_algebra_An(Field f, int n, std::string name) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  std::vector<Arrow> a;
  for (int i = 0; i + 1 < n; ++i) a.push_back({i, i + 1, "a" + std::to_string(i + 1)});
  return Algebra::from_quiver(f, v, a, {}, name.empty() ? "A" + std::to_string(n) : name);
}

AlgebraPtr dual_numbers(Field f, std::string name) {
  Relation r{{{0, 0}, Scalar::one(f)}};
  return Algebra::from_quiver(f, {"1"}, {{0, 0, "x"}}, {r}, name.empty() ? "k[x]/(x^2)" : name);
}

AlgebraPtr semisimple(Field f, int n, std::string name) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  return Algebra::from_quiver(f, v, {}, {}, name.empty() ? "k^" + std::to_string(n) : name);
}

}  // namespace trigor::algebra

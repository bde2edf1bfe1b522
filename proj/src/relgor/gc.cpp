#include "trigor/relgor/gc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace trigor::relgor {

using algebra::direct_sum;
using algebra::hom_basis;

namespace {

void require_same_algebra(const Module& m, const Module& c) {
  if (!m.algebra()->same_as(*c.algebra())) throw std::invalid_argument("modules live over different algebras");
}

Matrix vec(const Morphism& f) { return f.total().vectorize(); }

// Basic summands of C with spanning sets of the radical maps between them.
struct SummandData {
  std::vector<Module> reps;
  std::vector<std::vector<Morphism>> endo;           // End(X_i) basis
  std::vector<std::vector<std::vector<Morphism>>> rad;  // rad[j][i] spans rad(X_j, X_i)
};

std::shared_ptr<const SummandData> summand_data(const Module& c) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const SummandData>> cache;
  const std::string key = homology::module_key(c);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto d = std::make_shared<SummandData>();
  auto dec = algebra::decompose(c);
  for (auto [rep, mult] : dec.classes) d->reps.push_back(dec.summands[rep]);
  const std::size_t n = d->reps.size();
  for (const auto& x : d->reps) d->endo.push_back(hom_basis(x, x));
  d->rad.assign(n, std::vector<std::vector<Morphism>>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j) {
        d->rad[j][i] = hom_basis(d->reps[j], d->reps[i]);
        continue;
      }
      auto e = algebra::MatrixAlgebra::endomorphisms(d->reps[i]);
      Matrix jb = algebra::jacobson_radical(e);
      for (std::size_t t = 0; t < jb.cols(); ++t)
        d->rad[i][i].push_back(Morphism::from_total(d->reps[i], d->reps[i], e.element(jb.column_at(t)), false));
    }
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() > 4096) cache.clear();
  cache.emplace(key, d);
  return d;
}

Module sum_of(const std::vector<Module>& parts, std::size_t count, const AlgebraPtr& alg) {
  return direct_sum(std::vector<Module>(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(count)), alg).sum;
}

}  // namespace

bool is_sigma_self_orthogonal(const Module& c, std::size_t bound) {
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  for (std::size_t i = 1; i <= bound; ++i)
    if (homology::ext_dim(c, c, i) != 0) return false;
  return true;
}

Morphism add_approximation(const Module& m, const Module& c) {
  require_same_algebra(m, c);
  auto hs = hom_basis(m, c);
  auto ds = direct_sum(std::vector<Module>(hs.size(), c), c.algebra());
  Morphism ev = Morphism::zero(m, ds.sum);
  for (std::size_t k = 0; k < hs.size(); ++k) ev = ev + compose(ds.injections[k], hs[k]);
  return ev;
}

Approximation minimal_approximation(const Module& m, const Module& c) {
  require_same_algebra(m, c);
  auto d = summand_data(c);
  const std::size_t n = d->reps.size();
  const Field f = m.field();
  std::vector<std::vector<Morphism>> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = hom_basis(m, d->reps[i]);
  std::vector<Morphism> chosen;
  Approximation out;
  for (std::size_t i = 0; i < n; ++i) {
    if (h[i].empty()) continue;
    const std::size_t len = m.total_dim() * d->reps[i].total_dim();
    std::vector<Matrix> span;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& fj : h[j])
        for (const auto& g : d->rad[j][i]) span.push_back(vec(compose(g, fj)));
    Matrix s = span.empty() ? Matrix(f, len, 0) : linalg::image_basis(Matrix::hstack(span, f, len));
    for (const auto& hi : h[i]) {
      if (linalg::column_space_contains(s, vec(hi))) continue;
      chosen.push_back(hi);
      out.summand_class.push_back(i);
      std::vector<Matrix> more{s};
      for (const auto& e : d->endo[i]) more.push_back(vec(compose(e, hi)));
      s = linalg::image_basis(Matrix::hstack(more, f, len));
    }
  }
  std::vector<Module> parts;
  for (std::size_t k : out.summand_class) parts.push_back(d->reps[k]);
  auto ds = direct_sum(parts, m.algebra());
  Morphism a = Morphism::zero(m, ds.sum);
  for (std::size_t k = 0; k < chosen.size(); ++k) a = a + compose(ds.injections[k], chosen[k]);
  out.map = a;
  return out;
}

GCVerdict is_gc_projective(const Module& m, const Module& c, std::size_t bound) {
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  require_same_algebra(m, c);
  GCVerdict out;
  for (std::size_t i = 1; i <= bound; ++i) {
    std::size_t e = homology::ext_dim(m, c, i);
    if (e != 0) {
      out.kind = Verdict::Refuted;
      out.refutation = Refutation{Witness::W2, i, e, std::nullopt,
                                  "Ext^" + std::to_string(i) + "(M, C) has dimension " + std::to_string(e)};
      return out;
    }
  }
  const auto& alg = m.algebra();
  Certificate cert;
  cert.m = m;
  cert.c = c;
  cert.bound = bound;

  auto res = homology::projective_resolution(m, bound);
  LeftWindow& left = cert.left;
  left.syzygies.push_back(m);
  bool closed = false;
  for (std::size_t k = 1; k <= bound && !closed; ++k) {
    left.terms.push_back(res->term(k - 1));
    left.differentials.push_back(res->differential(k - 1));
    left.syzygies.push_back(res->syzygy(k));
    left.inclusions.push_back(res->syzygy_inclusion(k));
    left.closure = k;
    if (left.syzygies[k].is_zero()) {
      closed = true;
    } else if (auto w = algebra::add_witness(left.syzygies[k], sum_of(left.syzygies, k, alg))) {
      left.closure_witness = *w;
      closed = true;
    }
  }
  if (!closed) {
    out.note = "syzygies did not close up within bound " + std::to_string(bound);
    return out;
  }

  RightWindow& right = cert.right;
  right.cosyzygies.push_back(m);
  closed = false;
  for (std::size_t j = 0; j <= bound; ++j) {
    const Module mj = right.cosyzygies[j];
    right.closure = j;
    if (mj.is_zero()) {
      closed = true;
      break;
    }
    if (j > 0) {
      if (auto w = algebra::add_witness(mj, sum_of(right.cosyzygies, j, alg))) {
        right.closure_witness = *w;
        closed = true;
        break;
      }
    }
    if (j == bound) break;
    Approximation ap = minimal_approximation(mj, c);
    if (!ap.map.is_injective()) {
      std::size_t kd = algebra::kernel_of(ap.map).module.total_dim();
      out.kind = Verdict::Refuted;
      out.refutation = Refutation{Witness::W1, j, kd, ap.map,
                                  "add(C)-approximation of the cosyzygy at stage " + std::to_string(j) +
                                      " has a kernel of dimension " + std::to_string(kd)};
      return out;
    }
    auto ck = algebra::cokernel_of(ap.map);
    auto tw = algebra::add_witness(ap.map.target(), c);
    if (!tw) throw std::logic_error("approximation term is not in add(C)");
    right.approximations.push_back(ap.map);
    right.projections.push_back(ck.map);
    right.term_witnesses.push_back(*tw);
    right.cosyzygies.push_back(ck.module);
  }
  if (!closed) {
    out.note = "cosyzygies did not close up within bound " + std::to_string(bound);
    return out;
  }

  cert.digest = certificate_digest(cert);
  Validation v = validate_certificate(cert);
  if (!v.ok) {
    if (v.exactness_failure) {
      out.kind = Verdict::Refuted;
      out.refutation = v.exactness_failure;
      return out;
    }
    std::string msg = "certificate failed validation:";
    for (const auto& s : v.failures) msg += " " + s + ";";
    throw std::logic_error(msg);
  }
  out.kind = Verdict::Certified;
  out.note = "left closes at " + std::to_string(left.closure) + ", right closes at " + std::to_string(right.closure);
  out.certificate = std::move(cert);
  return out;
}

std::string WTilting::summary() const {
  return verdict_name(kind) + " (C: " + on_c.summary() + "; regular: " + on_regular.summary() + ")";
}

WTilting is_w_tilting(const Module& c, std::size_t bound) {
  static std::mutex mu;
  static std::map<std::string, WTilting> cache;
  const std::string key = homology::module_key(c) + "#" + std::to_string(bound);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  WTilting w;
  w.on_c = is_gc_projective(c, c, bound);
  w.on_regular = is_gc_projective(algebra::regular(c.algebra()), c, bound);
  if (w.on_c.certified() && w.on_regular.certified())
    w.kind = Verdict::Certified;
  else if (w.on_c.refuted() || w.on_regular.refuted())
    w.kind = Verdict::Refuted;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() > 1024) cache.clear();
  cache.emplace(key, w);
  return w;
}

std::string GCDim::to_string() const {
  if (status == Verdict::Inconclusive) return "inconclusive";
  return value.to_string();
}

GCDim gc_pd(const Module& m, const Module& c, std::size_t bound) {
  require_same_algebra(m, c);
  if (is_w_tilting(c, bound).kind != Verdict::Certified) throw std::invalid_argument("C not certified w-tilting");
  auto res = homology::projective_resolution(m, bound);
  GCDim out;
  out.value.bound = bound;
  for (std::size_t n = 0; n <= bound; ++n) {
    GCVerdict v = is_gc_projective(res->syzygy(n), c, bound);
    if (v.certified()) {
      out.value.value = n;
      return out;
    }
    if (v.kind == Verdict::Inconclusive) {
      out.status = Verdict::Inconclusive;
      return out;
    }
  }
  return out;
}

GCGlobalDim gc_global_dim(const AlgebraPtr& a, const Module& c, std::vector<Module> family, std::size_t bound,
                          bool exhaustive) {
  if (family.empty()) family = algebra::simples(a);
  GCGlobalDim out;
  out.lower = DimBound{std::size_t{0}, bound};
  out.family_size = family.size();
  for (const auto& m : family) {
    GCDim d = gc_pd(m, c, bound);
    if (d.status == Verdict::Inconclusive) {
      out.status = Verdict::Inconclusive;
      return out;
    }
    if (!d.value.exact())
      out.lower.value.reset();
    else if (out.lower.exact())
      out.lower.value = std::max(*out.lower.value, *d.value.value);
  }
  out.exact = exhaustive;
  return out;
}

}  // namespace trigor::relgor

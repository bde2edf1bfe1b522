#include "trigor/homology/resolution.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace trigor::homology {

namespace {

// Index of e_v among the basis elements of P_v at vertex v.
std::size_t idempotent_position(const algebra::Algebra& a, int v) {
  std::size_t pos = 0;
  for (int i = 0; i < a.idempotent(v); ++i)
    if (a.basis()[i].source == v && a.basis()[i].target == v) ++pos;
  return pos;
}

// Basis elements with source v and target w, in algebra order (the basis of P_v at w).
std::vector<int> paths(const algebra::Algebra& a, int v, int w) {
  std::vector<int> out;
  for (int i = 0; i < a.dim(); ++i)
    if (a.basis()[i].source == v && a.basis()[i].target == w) out.push_back(i);
  return out;
}

}  // namespace

Module free_module(const AlgebraPtr& alg, const std::vector<int>& gens, std::vector<std::size_t>* generator_index) {
  std::vector<Module> parts;
  std::vector<Module> proj = algebra::projective_indecomposables(alg);
  for (int v : gens) parts.push_back(proj[v]);
  Module sum = algebra::direct_sum(parts, alg).sum;
  if (generator_index) {
    generator_index->clear();
    std::vector<std::size_t> used(alg->num_vertices(), 0);
    for (int v : gens) {
      generator_index->push_back(sum.offset(v) + used[v] + idempotent_position(*alg, v));
      for (int w = 0; w < alg->num_vertices(); ++w) used[w] += proj[v].dim(w);
    }
  }
  return sum;
}

ProjectiveCover projective_cover(const Module& m) {
  const auto& alg = m.algebra();
  const auto& a = *alg;
  const Field f = m.field();
  const int nv = a.num_vertices();
  auto t = algebra::top(m);
  std::vector<int> gens;
  std::vector<Matrix> lifts;
  for (int v = 0; v < nv; ++v) {
    const Matrix& q = t.map.at(v);
    if (q.rows() == 0) continue;
    auto s = linalg::solve(q, Matrix::identity(f, q.rows()));
    if (!s) throw std::logic_error("top projection is not surjective");
    for (std::size_t k = 0; k < q.rows(); ++k) {
      gens.push_back(v);
      lifts.push_back(s->column_at(k));
    }
  }
  Module p = free_module(alg, gens);
  std::vector<Matrix> maps;
  for (int w = 0; w < nv; ++w) {
    Matrix x(f, m.dim(w), p.dim(w));
    std::size_t col = 0;
    for (std::size_t k = 0; k < gens.size(); ++k)
      for (int b : paths(a, gens[k], w)) x.set_block(0, col++, m.action(b) * lifts[k]);
    maps.push_back(std::move(x));
  }
  Morphism map(p, m, maps);
  if (!map.is_surjective()) throw std::logic_error("projective cover is not surjective");
  return {p, map, gens};
}

// ---------------------------------------------------------------------------

Resolution::Resolution(Module m) : target_(std::move(m)) {}

void Resolution::step_locked() const {
  const std::size_t n = terms_.size();
  const auto& alg = target_.algebra();
  Module omega;
  Morphism incl;
  if (n == 0) {
    omega = target_;
  } else {
    auto k = algebra::kernel_of(diffs_[n - 1]);
    omega = k.module;
    incl = k.map;
  }
  ProjectiveCover pc = projective_cover(omega);
  Morphism d = n == 0 ? pc.map : algebra::compose(incl, pc.map);
  std::vector<std::vector<Element>> coeff;
  if (n > 0) {
    const auto& a = *alg;
    std::vector<std::size_t> gidx;
    (void)free_module(alg, pc.generators, &gidx);
    const Module& prev = terms_[n - 1];
    const auto& prev_gens = gens_[n - 1];
    for (std::size_t k = 0; k < pc.generators.size(); ++k) {
      const int v = pc.generators[k];
      Matrix col = d.at(v).column_at(gidx[k] - pc.cover.offset(v));
      std::vector<Element> row;
      std::size_t r0 = 0;
      for (int u : prev_gens) {
        auto ps = paths(a, u, v);
        Element e;
        for (std::size_t j = 0; j < ps.size(); ++j)
          if (!col.entry_is_zero(r0 + j, 0)) e.push_back({ps[j], col.at(r0 + j, 0)});
        std::sort(e.begin(), e.end(), [](const algebra::Term& x, const algebra::Term& y) { return x.index < y.index; });
        row.push_back(std::move(e));
        r0 += ps.size();
      }
      if (r0 != prev.dim(v)) throw std::logic_error("resolution bookkeeping mismatch");
      coeff.push_back(std::move(row));
    }
  }
  terms_.push_back(pc.cover);
  gens_.push_back(pc.generators);
  diffs_.push_back(d);
  syzygies_.push_back(omega);
  incls_.push_back(incl);
  coeffs_.push_back(std::move(coeff));
}

void Resolution::extend_to(std::size_t n) const {
  std::lock_guard<std::mutex> lock(mu_);
  while (terms_.size() <= n) step_locked();
}

std::size_t Resolution::length() const {
  std::lock_guard<std::mutex> lock(mu_);
  return terms_.size();
}

const Module& Resolution::term(std::size_t i) const {
  extend_to(i);
  std::lock_guard<std::mutex> lock(mu_);
  return terms_[i];
}

const std::vector<int>& Resolution::generators(std::size_t i) const {
  extend_to(i);
  std::lock_guard<std::mutex> lock(mu_);
  return gens_[i];
}

const Morphism& Resolution::differential(std::size_t i) const {
  extend_to(i);
  std::lock_guard<std::mutex> lock(mu_);
  return diffs_[i];
}

const Module& Resolution::syzygy(std::size_t i) const {
  extend_to(i);
  std::lock_guard<std::mutex> lock(mu_);
  return syzygies_[i];
}

const Morphism& Resolution::syzygy_inclusion(std::size_t i) const {
  if (i == 0) throw std::invalid_argument("Omega^0 has no inclusion");
  extend_to(i);
  std::lock_guard<std::mutex> lock(mu_);
  return incls_[i];
}

const std::vector<std::vector<Element>>& Resolution::coefficients(std::size_t i) const {
  extend_to(i);
  std::lock_guard<std::mutex> lock(mu_);
  return coeffs_[i];
}

std::optional<std::size_t> Resolution::projective_dimension(std::size_t bound) const {
  if (target_.is_zero()) return 0;
  for (std::size_t i = 0; i <= bound; ++i)
    if (syzygy(i + 1).is_zero()) return i;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}
std::map<std::string, ResolutionPtr>& cache() {
  static std::map<std::string, ResolutionPtr> c;
  return c;
}
constexpr std::size_t kCacheLimit = 50000;

}  // namespace

std::string module_key(const Module& m) {
  return std::to_string(m.algebra()->fingerprint()) + "|" + m.field().name() + "|" + m.describe();
}

ResolutionPtr projective_resolution(const Module& m, std::size_t n) {
  const std::string key = module_key(m);
  ResolutionPtr r;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end()) {
      r = it->second;
    } else {
      if (cache().size() >= kCacheLimit) cache().clear();
      r = std::make_shared<Resolution>(m);
      cache().emplace(key, r);
    }
  }
  r->extend_to(n);
  return r;
}

void clear_resolution_cache() {
  std::lock_guard<std::mutex> lock(cache_mutex());
  cache().clear();
}

std::string DimBound::to_string() const {
  if (value) return std::to_string(*value);
  return "≥ " + std::to_string(bound + 1);
}

DimBound pd_up_to(const Module& m, std::size_t bound) {
  return {projective_resolution(m)->projective_dimension(bound), bound};
}

DimBound id_up_to(const Module& m, std::size_t bound) { return pd_up_to(algebra::dual(m), bound); }

DimBound gldim_up_to(const AlgebraPtr& a, std::size_t bound) {
  std::size_t best = 0;
  for (const auto& s : algebra::simples(a)) {
    DimBound d = pd_up_to(s, bound);
    if (!d.exact()) return {std::nullopt, bound};
    best = std::max(best, *d.value);
  }
  return {best, bound};
}

}  // namespace trigor::homology

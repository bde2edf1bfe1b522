#include <sstream>

#include "trigor/relgor/gc.hpp"

namespace trigor::relgor {

using algebra::direct_sum;
using algebra::hom_basis;
using algebra::hom_dim;

std::string witness_name(Witness w) {
  switch (w) {
    case Witness::W1: return "W1";
    case Witness::W2: return "W2";
    case Witness::W3: return "W3";
  }
  return "?";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "Certified";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string GCVerdict::summary() const {
  std::string s = verdict_name(kind);
  if (refutation) s += "(" + witness_name(refutation->kind) + ": " + refutation->detail + ")";
  else if (!note.empty()) s += "(" + note + ")";
  return s;
}

namespace {

struct Fnv {
  std::uint64_t h = 1469598103934665603ULL;
  void add(const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  }
  void add(const Module& m) { add(m.valid() ? m.describe() : "-"); }
  void add(const Morphism& f) {
    add(f.source());
    add(f.target());
    add(f.total().to_string());
  }
  void add(const std::optional<AddWitness>& w) {
    if (!w) return add("none");
    add(std::to_string(w->copies));
    add(w->section);
    add(w->retraction);
  }
};

// Columns span Hom(Y, C) restricted along f: X -> Y, i.e. h . f for h in a basis.
std::size_t restriction_rank(const Morphism& f, const Module& c) {
  auto hs = hom_basis(f.target(), c);
  if (hs.empty()) return 0;
  std::vector<Matrix> cols;
  for (const auto& h : hs) cols.push_back(compose(h, f).total().vectorize());
  return linalg::rank(Matrix::hstack(cols, c.field(), f.source().total_dim() * c.total_dim()));
}

bool is_section(const AddWitness& w, const Module& x, const Module& s) {
  if (!(w.section.source() == x) || !(w.retraction.target() == x)) return false;
  Module sk = direct_sum(std::vector<Module>(w.copies, s), s.algebra()).sum;
  if (!(w.section.target() == sk) || !(w.retraction.source() == sk)) return false;
  if (!w.section.intertwines() || !w.retraction.intertwines()) return false;
  return compose(w.retraction, w.section) == Morphism::identity(x);
}

bool image_contained(const Morphism& f, const Morphism& g) {
  return linalg::column_space_contains(g.total(), f.total());
}

}  // namespace

std::uint64_t certificate_digest(const Certificate& cert) {
  Fnv h;
  h.add(cert.m);
  h.add(cert.c);
  h.add(std::to_string(cert.bound));
  h.add("left" + std::to_string(cert.left.closure));
  for (const auto& x : cert.left.terms) h.add(x);
  for (const auto& x : cert.left.differentials) h.add(x);
  for (const auto& x : cert.left.syzygies) h.add(x);
  for (const auto& x : cert.left.inclusions) h.add(x);
  h.add(cert.left.closure_witness);
  h.add("right" + std::to_string(cert.right.closure));
  for (const auto& x : cert.right.cosyzygies) h.add(x);
  for (const auto& x : cert.right.approximations) h.add(x);
  for (const auto& x : cert.right.projections) h.add(x);
  for (const auto& w : cert.right.term_witnesses) h.add(std::optional<AddWitness>(w));
  h.add(cert.right.closure_witness);
  return h.h;
}

Validation validate_certificate(const Certificate& cert) {
  Validation v;
  auto fail = [&](const std::string& s) {
    v.ok = false;
    v.failures.push_back(s);
  };
  const Module& m = cert.m;
  const Module& c = cert.c;
  const auto& L = cert.left;
  const auto& R = cert.right;
  const std::size_t k = L.closure;

  if (k < 1 || k > cert.bound) fail("left closure index out of range");
  if (L.terms.size() != k || L.differentials.size() != k || L.inclusions.size() != k || L.syzygies.size() != k + 1) {
    fail("left window has inconsistent length");
    return v;
  }
  if (!(L.syzygies[0] == m)) fail("Omega^0 differs from M");
  for (std::size_t i = 0; i < k; ++i) {
    const std::string at = " at left degree " + std::to_string(i);
    const Morphism& d = L.differentials[i];
    const Morphism& inc = L.inclusions[i];
    const Module& below = i == 0 ? m : L.terms[i - 1];
    if (!algebra::is_projective(L.terms[i])) fail("term not projective" + at);
    if (!(d.source() == L.terms[i]) || !(d.target() == below) || !d.intertwines()) fail("bad differential" + at);
    if (!(inc.source() == L.syzygies[i + 1]) || !(inc.target() == L.terms[i]) || !inc.intertwines())
      fail("bad syzygy inclusion" + at);
    if (!v.ok) return v;
    std::size_t rk = linalg::rank(d.total());
    if (!inc.is_injective()) fail("syzygy inclusion not injective" + at);
    if (!compose(d, inc).is_zero()) fail("complex condition fails" + at);
    if (L.syzygies[i + 1].total_dim() + rk != L.terms[i].total_dim()) fail("not exact at the term" + at);
    if (rk != L.syzygies[i].total_dim()) fail("image has the wrong dimension" + at);
    if (i > 0 && !image_contained(d, L.inclusions[i - 1])) fail("image not the previous syzygy" + at);
    // Hom(P_i, C) -> Hom(Omega^{i+1}, C) onto
    std::size_t want = hom_dim(L.syzygies[i + 1], c), got = restriction_rank(inc, c);
    if (got != want) {
      fail("Hom(-,C) not exact at joint " + std::to_string(i + 1));
      if (!v.exactness_failure)
        v.exactness_failure = Refutation{Witness::W3, i + 1, want - got, inc,
                                         "restriction Hom(P_" + std::to_string(i) + ", C) -> Hom(Omega^" +
                                             std::to_string(i + 1) + ", C) misses " + std::to_string(want - got) +
                                             " dimensions"};
    }
  }
  if (!L.syzygies[k].is_zero()) {
    if (!L.closure_witness)
      fail("left closure witness missing");
    else if (!is_section(*L.closure_witness, L.syzygies[k],
                         direct_sum(std::vector<Module>(L.syzygies.begin(), L.syzygies.begin() + static_cast<std::ptrdiff_t>(k)),
                                    m.algebra())
                             .sum))
      fail("left closure witness does not split");
  }

  const std::size_t r = R.closure;
  if (r > cert.bound) fail("right closure index out of range");
  if (R.approximations.size() != r || R.projections.size() != r || R.term_witnesses.size() != r ||
      R.cosyzygies.size() != r + 1) {
    fail("right window has inconsistent length");
    return v;
  }
  if (!(R.cosyzygies[0] == m)) fail("M^0 differs from M");
  for (std::size_t j = 0; j < r; ++j) {
    const std::string at = " at right stage " + std::to_string(j);
    const Morphism& a = R.approximations[j];
    const Morphism& p = R.projections[j];
    if (!(a.source() == R.cosyzygies[j]) || !a.intertwines()) fail("bad approximation map" + at);
    if (!(p.source() == a.target()) || !(p.target() == R.cosyzygies[j + 1]) || !p.intertwines())
      fail("bad cokernel map" + at);
    if (!v.ok) return v;
    if (!a.is_injective()) fail("approximation not injective" + at);
    if (!p.is_surjective()) fail("cokernel map not surjective" + at);
    if (!compose(p, a).is_zero()) fail("complex condition fails" + at);
    if (a.source().total_dim() + p.target().total_dim() != a.target().total_dim()) fail("not exact" + at);
    if (!is_section(R.term_witnesses[j], a.target(), c)) fail("term not in add(C)" + at);
    std::size_t want = hom_dim(a.source(), c), got = restriction_rank(a, c);
    if (got != want) {
      fail("not an add(C)-approximation" + at);
      if (!v.exactness_failure)
        v.exactness_failure = Refutation{Witness::W3, j, want - got, a,
                                         "Hom(X^" + std::to_string(j) + ", C) -> Hom(M^" + std::to_string(j) +
                                             ", C) misses " + std::to_string(want - got) + " dimensions"};
    }
  }
  if (!R.cosyzygies[r].is_zero()) {
    if (r == 0 || !R.closure_witness)
      fail("right closure witness missing");
    else if (!is_section(*R.closure_witness, R.cosyzygies[r],
                         direct_sum(std::vector<Module>(R.cosyzygies.begin(), R.cosyzygies.begin() + static_cast<std::ptrdiff_t>(r)),
                                    m.algebra())
                             .sum))
      fail("right closure witness does not split");
  }
  if (certificate_digest(cert) != cert.digest) fail("digest mismatch");
  return v;
}

bool recheck_refutation(const Module& m, const Module& c, const Refutation& r) {
  switch (r.kind) {
    case Witness::W1:
      return r.map && r.map->intertwines() && !r.map->is_injective() &&
             algebra::in_add(r.map->target(), c) &&
             restriction_rank(*r.map, c) == hom_dim(r.map->source(), c) &&
             (r.degree > 0 || r.map->source() == m);
    case Witness::W2:
      return r.degree >= 1 && homology::ext_dim_dual(m, c, r.degree) == r.dimension && r.dimension > 0;
    case Witness::W3:
      return r.map && r.map->is_injective() && restriction_rank(*r.map, c) + r.dimension == hom_dim(r.map->source(), c) &&
             r.dimension > 0;
  }
  return false;
}

}  // namespace trigor::relgor

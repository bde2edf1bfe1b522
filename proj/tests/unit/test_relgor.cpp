#include <functional>

#include "doctest.h"
#include "trigor/relgor/gc.hpp"

using namespace trigor::algebra;
using namespace trigor::relgor;

namespace {

Field F2 = Field::prime(2), F3 = Field::prime(3), Q = Field::rationals();

Module dr(AlgebraPtr a) { return dual(regular(a->opposite())); }

// Every A2 module is P1^a + P2^b + S1^c.
std::vector<std::pair<Module, bool>> a2_modules(AlgebraPtr a2, std::size_t cap) {
  std::vector<std::pair<Module, bool>> out;
  Module p1 = projective(a2, 0), p2 = projective(a2, 1), s1 = simple(a2, 0);
  for (std::size_t x = 0; x <= cap; ++x)
    for (std::size_t y = 0; x + y <= cap; ++y)
      for (std::size_t z = 0; x + y + z <= cap && x + z <= cap; ++z) {
        if (x + y + z == 0) continue;
        std::vector<Module> parts;
        for (std::size_t i = 0; i < x; ++i) parts.push_back(p1);
        for (std::size_t i = 0; i < y; ++i) parts.push_back(p2);
        for (std::size_t i = 0; i < z; ++i) parts.push_back(s1);
        out.emplace_back(direct_sum(parts, a2).sum, z == 0);
      }
  return out;
}

Certificate certificate_of(const Module& m, const Module& c, std::size_t bound = 4) {
  GCVerdict v = is_gc_projective(m, c, bound);
  REQUIRE(v.certified());
  return *v.certificate;
}

bool rejects(Certificate cert, const std::function<void(Certificate&)>& mutate) {
  mutate(cert);
  cert.digest = certificate_digest(cert);
  return !validate_certificate(cert).ok;
}

}  // namespace

TEST_CASE("sigma self-orthogonality") {
  auto a2 = path_algebra_An(F2, 2);
  CHECK(is_sigma_self_orthogonal(regular(a2), 5));
  CHECK(is_sigma_self_orthogonal(dr(a2), 5));
  CHECK_FALSE(is_sigma_self_orthogonal(direct_sum(simple(a2, 0), projective(a2, 1)), 1));
  CHECK_THROWS_AS(is_sigma_self_orthogonal(regular(a2), 0), std::invalid_argument);
  CHECK_FALSE(is_sigma_self_orthogonal(simple(dual_numbers(F3), 0), 3));
}

TEST_CASE("evaluation and minimal approximations") {
  auto a2 = path_algebra_An(F3, 2);
  Module c = direct_sum(projective(a2, 0), simple(a2, 0));
  Morphism ev = add_approximation(c, c);
  CHECK(ev.is_injective());
  CHECK(ev.target().total_dim() == hom_dim(c, c) * c.total_dim());
  CHECK(add_approximation(simple(a2, 0), regular(a2)).target().is_zero());
  auto d = dual_numbers(Q);
  Module s = simple(d, 0), r = regular(d);
  Morphism e = add_approximation(s, r);
  CHECK(e.is_injective());
  CHECK(is_isomorphic(cokernel_of(e).module, s));
  // minimal approximation drops repeated and radical components
  auto ap = minimal_approximation(s, direct_sum(r, r));
  CHECK(is_isomorphic(ap.map.target(), r));
  CHECK(minimal_approximation(r, r).map.is_iso());
  auto am = minimal_approximation(regular(a2), dr(a2));
  CHECK(am.map.is_injective());
  CHECK(is_isomorphic(am.map.target(), power(projective(a2, 0), 2)));
}

TEST_CASE("G_C-projectivity examples") {
  auto a2 = path_algebra_An(F2, 2);
  Module r = regular(a2);
  CHECK(is_gc_projective(projective(a2, 0), r).certified());
  CHECK(is_gc_projective(projective(a2, 1), r).certified());
  GCVerdict s1 = is_gc_projective(simple(a2, 0), r);
  REQUIRE(s1.refuted());
  CHECK(s1.refutation->kind == Witness::W2);
  CHECK(s1.refutation->degree == 1);
  CHECK(recheck_refutation(simple(a2, 0), r, *s1.refutation));
  for (Field f : {F2, F3, Q}) {
    auto d = dual_numbers(f);
    GCVerdict v = is_gc_projective(simple(d, 0), regular(d));
    REQUIRE(v.certified());
    CHECK(v.certificate->left.closure == 1);
    CHECK(v.certificate->right.closure == 1);
    CHECK(validate_certificate(*v.certificate).ok);
  }
  // W1: nothing maps S2 ... into add(S1) injectively
  GCVerdict w1 = is_gc_projective(r, simple(a2, 0));
  REQUIRE(w1.refuted());
  CHECK(w1.refutation->kind == Witness::W1);
  CHECK(recheck_refutation(r, simple(a2, 0), *w1.refutation));
}

TEST_CASE("hereditary sanity: certified means projective over A2 with C = R") {
  auto a2 = path_algebra_An(F3, 2);
  Module r = regular(a2);
  for (const auto& [m, proj] : a2_modules(a2, 3)) {
    GCVerdict v = is_gc_projective(m, r, 4);
    CHECK(v.certified() == proj);
    CHECK(v.certified() == is_projective(m));
    if (v.certified()) CHECK(validate_certificate(*v.certificate).ok);
    if (v.refuted()) CHECK(recheck_refutation(m, r, *v.refutation));
  }
}

TEST_CASE("self-injective: every module certified") {
  auto d = dual_numbers(F2);
  Module r = regular(d), s = simple(d, 0);
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b) {
      if (a + b == 0) continue;
      Module m = direct_sum(power(r, a), power(s, b));
      CHECK(is_gc_projective(m, r, 3).certified());
    }
}

TEST_CASE("monotone in the bound, closed under sums, add(C) certified") {
  auto a3 = path_algebra_An(F2, 3);
  Module c = dr(a3);
  std::vector<Module> mods = projective_indecomposables(a3);
  for (auto& m : simples(a3)) mods.push_back(m);
  for (auto& m : injective_indecomposables(a3)) mods.push_back(m);
  for (const auto& m : mods) {
    Verdict last = Verdict::Inconclusive;
    for (std::size_t b = 1; b <= 5; ++b) {
      Verdict v = is_gc_projective(m, c, b).kind;
      if (last != Verdict::Inconclusive) CHECK(v == last);
      last = v;
    }
  }
  REQUIRE(is_sigma_self_orthogonal(c, 4));
  for (const auto& x : injective_indecomposables(a3)) CHECK(is_gc_projective(x, c, 4).certified());
  for (const auto& x : mods)
    for (const auto& y : mods)
      if (is_gc_projective(x, c, 4).certified() && is_gc_projective(y, c, 4).certified())
        CHECK(is_gc_projective(direct_sum(x, y), c, 4).certified());
}

TEST_CASE("certificate mutations are rejected") {
  auto d = dual_numbers(F3);
  Certificate base = certificate_of(simple(d, 0), regular(d));
  auto a2 = path_algebra_An(F3, 2);
  Certificate two = certificate_of(simple(a2, 0), dr(a2));
  REQUIRE(two.left.closure == 2);
  CHECK(validate_certificate(base).ok);
  CHECK(validate_certificate(two).ok);

  Certificate tampered = base;
  tampered.digest ^= 1;
  CHECK_FALSE(validate_certificate(tampered).ok);
  CHECK(rejects(base, [](Certificate& c) { c.left.closure = 0; }));
  CHECK(rejects(base, [](Certificate& c) { c.left.closure = c.bound + 1; }));
  CHECK(rejects(two, [](Certificate& c) { c.left.terms.pop_back(); }));
  CHECK(rejects(base, [&](Certificate& c) { c.left.terms[0] = simple(d, 0); }));
  CHECK(rejects(base, [](Certificate& c) {
    c.left.differentials[0] = Morphism::zero(c.left.differentials[0].source(), c.left.differentials[0].target());
  }));
  CHECK(rejects(base, [](Certificate& c) {
    c.left.inclusions[0] = Morphism::zero(c.left.inclusions[0].source(), c.left.inclusions[0].target());
  }));
  CHECK(rejects(base, [&](Certificate& c) { c.left.syzygies[0] = regular(d); }));
  CHECK(rejects(base, [](Certificate& c) { c.left.closure_witness.reset(); }));
  CHECK(rejects(base, [](Certificate& c) {
    auto& w = *c.left.closure_witness;
    w.retraction = Morphism::zero(w.retraction.source(), w.retraction.target());
  }));
  CHECK(rejects(base, [](Certificate& c) {
    c.right.approximations[0] = Morphism::zero(c.right.approximations[0].source(), c.right.approximations[0].target());
  }));
  CHECK(rejects(base, [](Certificate& c) {
    c.right.projections[0] = Morphism::zero(c.right.projections[0].source(), c.right.projections[0].target());
  }));
  CHECK(rejects(base, [](Certificate& c) {
    auto& w = c.right.term_witnesses[0];
    w.section = Morphism::zero(w.section.source(), w.section.target());
  }));
  CHECK(rejects(base, [&](Certificate& c) { c.right.cosyzygies[1] = regular(d); }));
  CHECK(rejects(base, [](Certificate& c) { c.right.closure_witness.reset(); }));
  CHECK(rejects(base, [](Certificate& c) { c.right.closure += 1; }));
  CHECK(rejects(base, [&](Certificate& c) { c.m = regular(d); }));
  CHECK(rejects(base, [](Certificate& c) {
    // x . inclusion is no longer injective
    const Module& p = c.left.inclusions[0].target();
    Morphism x = Morphism::zero(p, p);
    for (const auto& h : hom_basis(p, p))
      if (!h.is_iso()) x = h;
    c.left.inclusions[0] = compose(x, c.left.inclusions[0]);
  }));
  CHECK(rejects(base, [](Certificate& c) { c.right.term_witnesses[0].copies += 1; }));
  CHECK(rejects(two, [](Certificate& c) { c.left.syzygies[2] = c.left.syzygies[1]; }));

  // Same window with C = R: the projective half is no longer Hom(-,C)-exact.
  Certificate swapped = two;
  swapped.c = regular(a2);
  swapped.digest = certificate_digest(swapped);
  Validation v = validate_certificate(swapped);
  CHECK_FALSE(v.ok);
  REQUIRE(v.exactness_failure.has_value());
  CHECK(v.exactness_failure->kind == Witness::W3);
  CHECK(v.exactness_failure->degree == 1);
  CHECK(recheck_refutation(swapped.m, swapped.c, *v.exactness_failure));
}

TEST_CASE("w-tilting detection") {
  auto a2 = path_algebra_An(F2, 2);
  CHECK(is_w_tilting(regular(a2), 4).kind == Verdict::Certified);
  CHECK(is_w_tilting(dr(a2), 4).kind == Verdict::Certified);
  WTilting s = is_w_tilting(simple(a2, 0), 4);
  CHECK(s.kind == Verdict::Refuted);
  CHECK(s.on_c.certified());
  CHECK(s.on_regular.refuted());
  CHECK(is_w_tilting(regular(dual_numbers(F3)), 4).kind == Verdict::Certified);
}

TEST_CASE("G_C-projective dimension") {
  auto a2 = path_algebra_An(F2, 2);
  Module r = regular(a2);
  CHECK(gc_pd(projective(a2, 1), r).value.value == 0u);
  CHECK(gc_pd(simple(a2, 0), r).value.value == 1u);
  CHECK(gc_pd(simple(a2, 0), dr(a2)).value.value == 0u);
  CHECK_THROWS_WITH_AS(gc_pd(simple(a2, 1), simple(a2, 0)), "C not certified w-tilting", std::invalid_argument);
  auto d = dual_numbers(F2);
  CHECK(gc_pd(simple(d, 0), regular(d)).to_string() == "0");
  // pd of S1 over A3 is 1, of I1 is 0 with C = DR
  auto a3 = path_algebra_An(F3, 3);
  CHECK(gc_pd(simple(a3, 0), regular(a3)).value.value == 1u);
}

TEST_CASE("G_C global dimension lower bounds") {
  auto ss = semisimple(Q, 2);
  auto g = gc_global_dim(ss, regular(ss), {});
  CHECK(g.lower.value == 0u);
  auto d = dual_numbers(F3);
  auto gd = gc_global_dim(d, regular(d), {simple(d, 0), regular(d)}, 4, true);
  CHECK(gd.lower.value == 0u);
  CHECK(gd.exact);
  auto a2 = path_algebra_An(F2, 2);
  auto ga = gc_global_dim(a2, regular(a2), {});
  CHECK(ga.lower.value == 1u);
  CHECK_FALSE(ga.exact);
  CHECK(gc_global_dim(a2, dr(a2), {}).lower.value == 0u);
}

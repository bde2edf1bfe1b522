#include "trigor/trimat/checks.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "trigor/oracle/enumerate.hpp"

namespace trigor::trimat {

using homology::ext_dim;
using homology::tor_dim;

namespace {

std::string str(std::size_t n) { return std::to_string(n); }

// s: Y -> X with p . s = id for a surjection p: X -> Y.
std::optional<Morphism> section_of(const Morphism& p) {
  const Module& x = p.source();
  const Module& y = p.target();
  if (y.is_zero()) return Morphism::zero(y, x);
  auto hs = algebra::hom_basis(y, x);
  if (hs.empty()) return std::nullopt;
  const Field f = x.field();
  std::vector<Matrix> cols;
  for (const auto& h : hs) cols.push_back(algebra::compose(p, h).total().vectorize());
  Matrix sys = Matrix::hstack(cols, f, y.total_dim() * y.total_dim());
  auto c = linalg::solve(sys, Matrix::identity(f, y.total_dim()).vectorize());
  if (!c) return std::nullopt;
  std::vector<linalg::Scalar> coeffs;
  for (std::size_t k = 0; k < hs.size(); ++k) coeffs.push_back(c->at(k, 0));
  return algebra::combine(hs, coeffs, y, x);
}

std::string verdict_word(Verdict v) { return relgor::verdict_name(v); }

void require_compatible(const Setting& s, const CompatibilityReport& compat, const char* what) {
  if (compat.verdict != Compatibility::Compatible)
    throw std::invalid_argument(std::string(what) + ": precondition: U is not certified C-compatible (" +
                                compatibility_name(compat.verdict) + ")");
  if (relgor::is_w_tilting(s.c1, s.bound).kind != Verdict::Certified ||
      relgor::is_w_tilting(s.c2, s.bound).kind != Verdict::Certified)
    throw std::invalid_argument(std::string(what) + ": precondition: C1 and C2 must be certified w-tilting");
}

}  // namespace

// ---------------------------------------------------------------------------

Setting Setting::make(TriangleAlgebra ta, Module c1, Module c2, std::size_t bound) {
  TriangleModule c = functor_p(ta, c1, c2);
  Module cf = triple_to_flat(ta, c);
  return {std::move(ta), std::move(c1), std::move(c2), std::move(c), std::move(cf), bound};
}

Setting Setting::regular(TriangleAlgebra ta, std::size_t bound) {
  Module a = algebra::regular(ta.A()), b = algebra::regular(ta.B());
  return make(std::move(ta), a, b, bound);
}

Verdict gc_verdict(const Module& m, const Module& c, std::size_t bound) {
  static std::mutex mu;
  static std::map<std::string, Verdict> memo;
  const std::string key = homology::module_key(m) + "#" + homology::module_key(c) + "#" + str(bound);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Verdict v = relgor::is_gc_projective(m, c, bound).kind;
  std::lock_guard<std::mutex> lock(mu);
  if (memo.size() > 200000) memo.clear();
  memo.emplace(key, v);
  return v;
}

Families default_families(const Setting& s, std::size_t cap_a, std::size_t cap_b) {
  Families f;
  const auto& ta = s.ta;
  if (ta.field().is_finite()) {
    for (const auto& m : oracle::enumerate_modules(ta.A(), oracle::EnumerationCap::uniform(ta.A(), cap_a)))
      if (!m.is_zero() && gc_verdict(m, s.c1, s.bound) == Verdict::Certified) f.a.push_back(m);
    for (const auto& m : oracle::enumerate_modules(ta.B(), oracle::EnumerationCap::uniform(ta.B(), cap_b)))
      if (!m.is_zero() && gc_verdict(m, s.c2, s.bound) == Verdict::Certified) f.b.push_back(m);
    f.name = "certified G_C1-projective A-modules with dims <= " + str(cap_a) + " and G_C2-projective B-modules with dims <= " +
             str(cap_b);
    f.exhaustive = true;
    return f;
  }
  auto fill = [&](const Module& c, const AlgebraPtr& alg, std::vector<Module>& out) {
    auto d = algebra::decompose(c);
    for (const auto& [rep, mult] : d.classes) out.push_back(d.summands[rep]);
    for (const auto& p : algebra::projective_indecomposables(alg))
      if (gc_verdict(p, c, s.bound) == Verdict::Certified) out.push_back(p);
  };
  fill(s.c1, ta.A(), f.a);
  fill(s.c2, ta.B(), f.b);
  f.name = "indecomposable summands of C1, C2 and the certified projectives";
  return f;
}

// ---------------------------------------------------------------------------

Report check_adjunctions(const TriangleAlgebra& ta, const TriangleModule& m, const TriangleModule& n) {
  Report r;
  r.title = "adjunctions";
  const Module mf = triple_to_flat(ta, m), nf = triple_to_flat(ta, n);
  const std::size_t h11 = algebra::hom_dim(m.m1, n.m1), h22 = algebra::hom_dim(m.m2, n.m2);
  {
    std::size_t lhs = algebra::hom_dim(triple_to_flat(ta, functor_p(ta, m.m1, m.m2)), nf);
    r.add("Hom_T(p(M1,M2), N) = Hom_A(M1,N1) + Hom_B(M2,N2)", str(lhs), str(h11 + h22), lhs == h11 + h22);
  }
  {
    std::size_t lhs = algebra::hom_dim(mf, triple_to_flat(ta, functor_h(ta, n.m1, n.m2)));
    r.add("Hom_T(M, h(N1,N2)) = Hom_A(M1,N1) + Hom_B(M2,N2)", str(lhs), str(h11 + h22), lhs == h11 + h22);
  }
  {
    std::size_t lhs = algebra::hom_dim(mf, triple_to_flat(ta, functor_r(ta, n.m1, n.m2)));
    std::size_t rhs = h11 + algebra::hom_dim(cokernel_of_phi(m).module, n.m2);
    r.add("Hom_T(M, r(N1,N2)) = Hom_A(M1,N1) + Hom_B(coker phi, N2)", str(lhs), str(rhs), lhs == rhs);
  }
  return r;
}

Report check_ext_isos(const TriangleAlgebra& ta, const TriangleModule& m, const TriangleModule& n, std::size_t degree) {
  if (degree == 0) throw std::invalid_argument("check_ext_isos: degree must be at least 1");
  Report r;
  r.title = "Ext isomorphisms in degree " + str(degree);
  const auto& u = ta.U();
  const Module mf = triple_to_flat(ta, m), nf = triple_to_flat(ta, n);
  const Module zb = Module::zero(ta.B()), za = Module::zero(ta.A());
  bool tor_ok = true, ext_ok = true;
  for (std::size_t i = 1; i <= degree; ++i) {
    tor_ok = tor_ok && tor_dim(u, m.m1, i) == 0;
    ext_ok = ext_ok && ext_dim(u.as_left_module(), n.m2, i) == 0;
  }
  const std::size_t e11 = ext_dim(m.m1, n.m1, degree), e22 = ext_dim(m.m2, n.m2, degree);
  const std::string d = str(degree);
  if (tor_ok) {
    std::size_t lhs = ext_dim(triple_to_flat(ta, functor_p(ta, m.m1, zb)), nf, degree);
    r.add("(1) Ext^" + d + "_T((M1; U(x)M1), N) = Ext^" + d + "_A(M1, N1)", str(lhs), str(e11), lhs == e11);
  } else {
    r.skip("(1) Ext^" + d + "_T((M1; U(x)M1), N) = Ext^" + d + "_A(M1, N1)", "hypothesis fails: Tor_i(U, M1) != 0");
  }
  {
    std::size_t lhs = ext_dim(triple_to_flat(ta, functor_p(ta, za, m.m2)), nf, degree);
    r.add("(2) Ext^" + d + "_T((0; M2), N) = Ext^" + d + "_B(M2, N2)", str(lhs), str(e22), lhs == e22);
  }
  {
    std::size_t lhs = ext_dim(mf, triple_to_flat(ta, functor_r(ta, n.m1, zb)), degree);
    r.add("(3) Ext^" + d + "_T(M, (N1; 0)) = Ext^" + d + "_A(M1, N1)", str(lhs), str(e11), lhs == e11);
  }
  if (ext_ok) {
    std::size_t lhs = ext_dim(mf, triple_to_flat(ta, functor_h(ta, za, n.m2)), degree);
    r.add("(4) Ext^" + d + "_T(M, (Hom_B(U,N2); N2)) = Ext^" + d + "_B(M2, N2)", str(lhs), str(e22), lhs == e22);
  } else {
    r.skip("(4) Ext^" + d + "_T(M, (Hom_B(U,N2); N2)) = Ext^" + d + "_B(M2, N2)", "hypothesis fails: Ext^i_B(U, N2) != 0");
  }
  return r;
}

// ---------------------------------------------------------------------------

AddMembership add_membership_triple(const TriangleAlgebra& ta, const TriangleModule& x, const Module& c1, const Module& c2) {
  AddMembership out;
  if (!x.phi.is_injective()) {
    out.reason = "phi is not injective (kernel of dimension " + str(algebra::kernel_of(x.phi).module.total_dim()) + ")";
    return out;
  }
  auto ck = cokernel_of_phi(x);
  auto s = section_of(ck.map);
  if (!s) {
    out.reason = "0 -> U(x)X1 -> X2 -> coker phi -> 0 does not split";
    return out;
  }
  auto iso = algebra::find_isomorphism(triple_to_flat(ta, x), triple_to_flat(ta, functor_p(ta, x.m1, ck.module)));
  if (!iso) {
    out.reason = "X is not isomorphic to p(X1, coker phi)";
    return out;
  }
  if (!algebra::in_add(x.m1, c1)) {
    out.reason = "X1 is not in add(C1)";
    return out;
  }
  if (!algebra::in_add(ck.module, c2)) {
    out.reason = "coker phi is not in add(C2)";
    return out;
  }
  out.member = true;
  out.reason = "X = p(X1, coker phi) with X1 in add(C1) and coker phi in add(C2)";
  out.comparison = iso;
  out.split = s;
  return out;
}

// ---------------------------------------------------------------------------

std::string compatibility_name(Compatibility c) {
  switch (c) {
    case Compatibility::Compatible: return "compatible-certified";
    case Compatibility::WeaklyCompatible: return "weakly-compatible-certified";
    case Compatibility::Refuted: return "refuted";
    case Compatibility::Inconclusive: return "inconclusive";
  }
  return "?";
}

CompatibilityReport compatibility_report(const Setting& s, const Families& fam) {
  CompatibilityReport out;
  Report& r = out.report;
  r.title = "compatibility of U with C = p(C1, C2)";
  r.family = fam.name;
  const auto& u = s.ta.U();

  std::string a_wit;
  for (const auto& g : fam.a) {
    std::size_t t = tor_dim(u, g, 1);
    if (t != 0) {
      a_wit = "Tor_1(U, G1) = " + str(t) + " for G1 = " + g.describe();
      break;
    }
  }
  r.fact("Tor condition, necessary: Tor_1(U, G1) = 0 on the A-family", a_wit.empty() ? "holds" : "fails: " + a_wit);

  std::string b_wit;
  auto d1 = algebra::decompose(s.c1);
  for (const auto& [rep, mult] : d1.classes) {
    Module y = algebra::tensor_over(u, d1.summands[rep]).module;
    for (const auto& g : fam.b) {
      std::size_t e = ext_dim(g, y, 1);
      if (e != 0) {
        b_wit = "Ext^1_B(G2, U(x)X1) = " + str(e) + " for G2 = " + g.describe() + ", X1 = " + d1.summands[rep].describe();
        break;
      }
    }
    if (!b_wit.empty()) break;
  }
  r.fact("Ext condition, necessary: Ext^1_B(G2, U(x)X1) = 0 on the B-family and summands X1 of C1",
         b_wit.empty() ? "holds" : "fails: " + b_wit);

  auto pd_u = homology::pd_up_to(u.as_right_module(), s.bound);
  const std::size_t tor_c1 = tor_dim(u, s.c1, 1);
  const bool a_suff = pd_u.exact() && tor_c1 == 0;
  r.fact("pd(U_A)", pd_u.to_string());
  r.fact("dim Tor_1(U, C1)", str(tor_c1));
  r.fact("tensor condition, sufficient: fd(U_A) finite and Tor_1(U, C1) = 0", a_suff ? "yes" : "no");

  Module uc1 = algebra::tensor_over(u, s.c1).module;
  bool b_suff = algebra::in_add(uc1, s.c2);
  std::string b_route = b_suff ? "U(x)C1 in add(C2)" : "";
  if (!b_suff) {
    auto id = homology::id_up_to(uc1, s.bound);
    if (id.exact() && ext_dim(s.c2, uc1, 1) == 0) {
      b_suff = true;
      b_route = "Ext^1(C2, U(x)C1) = 0 and id(U(x)C1) = " + id.to_string();
    }
  }
  r.fact("Ext condition, sufficient", b_suff ? b_route : "no");

  if (!a_wit.empty()) {
    out.verdict = Compatibility::Refuted;
    out.witness = "Tor condition fails: " + a_wit;
  } else if (!b_wit.empty()) {
    out.verdict = Compatibility::Refuted;
    out.witness = "Ext condition fails: " + b_wit;
  } else if (a_suff && b_suff) {
    out.verdict = Compatibility::Compatible;
  } else if (b_suff && fam.exhaustive && relgor::is_w_tilting(s.c1, s.bound).kind == Verdict::Certified) {
    // Tor_1 vanishing on all of G_C1P(A) characterises the Tor condition; here only up to the family cap
    out.verdict = Compatibility::WeaklyCompatible;
    out.witness = "Tor condition relative to the family";
  } else {
    out.verdict = Compatibility::Inconclusive;
  }
  r.fact("verdict", compatibility_name(out.verdict) + (out.witness.empty() ? "" : " (" + out.witness + ")"));
  return out;
}

// ---------------------------------------------------------------------------

Report gc_structure_check(const Setting& s, const CompatibilityReport& compat, const TriangleModule& m) {
  require_compatible(s, compat, "gc_structure_check");
  Report r;
  r.title = "structure of G_C-projectives";
  const Verdict lhs = gc_verdict(s.flat(m), s.c_flat, s.bound);
  const bool inj = m.phi.is_injective();
  const Module coker = cokernel_of_phi(m).module;
  Verdict rhs = Verdict::Refuted;
  std::string rhs_text = "phi not injective";
  if (inj) {
    Verdict v1 = gc_verdict(m.m1, s.c1, s.bound), v2 = gc_verdict(coker, s.c2, s.bound);
    rhs_text = "phi injective, M1 " + verdict_word(v1) + ", coker " + verdict_word(v2);
    if (v1 == Verdict::Refuted || v2 == Verdict::Refuted)
      rhs = Verdict::Refuted;
    else if (v1 == Verdict::Certified && v2 == Verdict::Certified)
      rhs = Verdict::Certified;
    else
      rhs = Verdict::Inconclusive;
  }
  if (lhs == Verdict::Inconclusive || rhs == Verdict::Inconclusive)
    r.skip("M in G_CP(T) <=> phi injective and M1, coker phi relative Gorenstein projective",
           "indefinite: flat " + verdict_word(lhs) + ", triple " + rhs_text);
  else
    r.add("M in G_CP(T) <=> phi injective and M1, coker phi relative Gorenstein projective", verdict_word(lhs),
          rhs_text, lhs == rhs);

  if (lhs == Verdict::Certified && relgor::is_sigma_self_orthogonal(s.c2, s.bound)) {
    Verdict vu = gc_verdict(algebra::tensor_over(s.ta.U(), m.m1).module, s.c2, s.bound);
    Verdict v2 = gc_verdict(m.m2, s.c2, s.bound);
    if (vu == Verdict::Inconclusive || v2 == Verdict::Inconclusive)
      r.skip("U(x)M1 in G_C2P(B) <=> M2 in G_C2P(B)", "indefinite");
    else
      r.add("U(x)M1 in G_C2P(B) <=> M2 in G_C2P(B)", verdict_word(vu), verdict_word(v2), vu == v2);
  }
  return r;
}

Report wtilting_transfer_check(const Setting& s, const CompatibilityReport& compat) {
  Report r;
  r.title = "w-tilting transfer to p(C1, C2)";
  const Verdict w1 = relgor::is_w_tilting(s.c1, s.bound).kind;
  const Verdict w2 = relgor::is_w_tilting(s.c2, s.bound).kind;
  const auto wp = relgor::is_w_tilting(s.c_flat, s.bound);
  r.fact("C1 w-tilting", verdict_word(w1));
  r.fact("C2 w-tilting", verdict_word(w2));
  r.fact("p(C1,C2) w-tilting", wp.summary());
  r.fact("compatibility", compatibility_name(compat.verdict) + (compat.witness.empty() ? "" : " (" + compat.witness + ")"));
  const bool weak = compat.verdict == Compatibility::Compatible || compat.verdict == Compatibility::WeaklyCompatible;
  const bool both = w1 == Verdict::Certified && w2 == Verdict::Certified;
  if (weak && both) {
    if (wp.kind == Verdict::Inconclusive)
      r.skip("weakly compatible and C1, C2 w-tilting => p(C1,C2) w-tilting", "p(C1,C2) inconclusive");
    else
      r.add("weakly compatible and C1, C2 w-tilting => p(C1,C2) w-tilting", "C1, C2 certified",
            verdict_word(wp.kind), wp.kind == Verdict::Certified);
  }
  if (compat.verdict == Compatibility::Compatible) {
    if (wp.kind == Verdict::Inconclusive || w1 == Verdict::Inconclusive || w2 == Verdict::Inconclusive)
      r.skip("compatible => (p(C1,C2) w-tilting <=> C1 and C2 w-tilting)", "some verdict inconclusive");
    else
      r.add("compatible => (p(C1,C2) w-tilting <=> C1 and C2 w-tilting)", verdict_word(wp.kind),
            both ? "both certified" : "not both", (wp.kind == Verdict::Certified) == both);
  }
  if (!weak) r.fact("note", "no compatibility hypothesis certified; implications not asserted");
  return r;
}

Report cm_free_check(const Setting& s, const CompatibilityReport& compat, const std::vector<Module>& all_a,
                     const std::vector<Module>& all_b, const std::vector<Module>& all_t) {
  Report r;
  r.title = "relative CM-freeness";
  r.family = "enumerated modules: " + str(all_a.size()) + " over A, " + str(all_b.size()) + " over B, " +
             str(all_t.size()) + " over T";
  struct Cm {
    Verdict v = Verdict::Certified;
    std::string witness;
  };
  auto scan = [&](const std::vector<Module>& ms, const Module& c) {
    Cm out;
    for (const auto& m : ms) {
      if (m.is_zero()) continue;
      Verdict v = gc_verdict(m, c, s.bound);
      if (v == Verdict::Inconclusive) out.v = Verdict::Inconclusive;
      if (v == Verdict::Certified && !algebra::in_add(m, c)) {
        out.v = Verdict::Refuted;
        out.witness = m.describe();
        return out;
      }
    }
    return out;
  };
  Cm a = scan(all_a, s.c1), b = scan(all_b, s.c2), t = scan(all_t, s.c_flat);
  auto word = [](const Cm& c) {
    return c.v == Verdict::Certified ? std::string("CM-free") : c.v == Verdict::Refuted ? "not CM-free, witness " + c.witness : "indefinite";
  };
  r.fact("A relative to C1", word(a));
  r.fact("B relative to C2", word(b));
  r.fact("T relative to C", word(t));
  const bool weak = compat.verdict == Compatibility::Compatible || compat.verdict == Compatibility::WeaklyCompatible;
  const bool definite = a.v != Verdict::Inconclusive && b.v != Verdict::Inconclusive && t.v != Verdict::Inconclusive;
  if (!weak || !definite) {
    r.skip("T CM-free => A and B CM-free", weak ? "indefinite verdicts" : "U not weakly compatible");
    return r;
  }
  const bool ab = a.v == Verdict::Certified && b.v == Verdict::Certified;
  const bool tt = t.v == Verdict::Certified;
  r.add("T CM-free => A and B CM-free", word(t), ab ? "both CM-free" : "not both", !tt || ab);
  if (compat.verdict == Compatibility::Compatible)
    r.add("A and B CM-free => T CM-free", ab ? "both CM-free" : "not both", word(t), !ab || tt);
  return r;
}

// ---------------------------------------------------------------------------

Report special_precover_check(const Setting& s, const CompatibilityReport& compat, const Families& fam, const Morphism& map) {
  require_compatible(s, compat, "special_precover_check");
  if (gc_verdict(map.source(), s.c_flat, s.bound) != Verdict::Certified)
    throw std::invalid_argument("special_precover_check: precondition: the source is not certified G_C-projective");
  Report r;
  r.title = "special G_CP(T)-precover";
  r.family = fam.name + "; T-family (H1; U(x)H1), (0; H2) and " + str(fam.t.size()) + " extra members";
  const auto& ta = s.ta;
  const Module za = Module::zero(ta.A()), zb = Module::zero(ta.B());

  std::string lhs_text;
  bool lhs = map.is_surjective();
  if (!lhs) {
    lhs_text = "f not surjective (cokernel of dimension " + str(algebra::cokernel_of(map).module.total_dim()) + ")";
  } else {
    Module k = algebra::kernel_of(map).module;
    std::vector<Module> tf;
    for (const auto& h : fam.a) tf.push_back(triple_to_flat(ta, functor_p(ta, h, zb)));
    for (const auto& h : fam.b) tf.push_back(triple_to_flat(ta, functor_p(ta, za, h)));
    for (const auto& h : fam.t) tf.push_back(h);
    for (const auto& h : tf) {
      std::size_t e = ext_dim(h, k, 1);
      if (e != 0) {
        lhs = false;
        lhs_text = "Ext^1_T(H, ker f) = " + str(e) + " for H = " + h.describe();
        break;
      }
    }
    if (lhs) lhs_text = "f surjective, Ext^1_T(H, ker f) = 0 on the T-family";
  }

  TriangleMorphism tf = flat_to_triple(ta, map);
  std::string rhs_text;
  bool rhs = true;
  if (gc_verdict(tf.f1.source(), s.c1, s.bound) != Verdict::Certified) {
    rhs = false;
    rhs_text = "A side: G1 not certified G_C1-projective";
  } else if (!tf.f1.is_surjective()) {
    rhs = false;
    rhs_text = "A side: f1 not surjective (cokernel of dimension " + str(algebra::cokernel_of(tf.f1).module.total_dim()) + ")";
  } else if (!tf.f2.is_surjective()) {
    rhs = false;
    rhs_text = "B side: f2 not surjective (cokernel of dimension " + str(algebra::cokernel_of(tf.f2).module.total_dim()) + ")";
  } else {
    Module k1 = algebra::kernel_of(tf.f1).module, k2 = algebra::kernel_of(tf.f2).module;
    for (const auto& h : fam.a) {
      std::size_t e = ext_dim(h, k1, 1);
      if (e != 0) {
        rhs = false;
        rhs_text = "A side: Ext^1_A(H1, ker f1) = " + str(e) + " for H1 = " + h.describe();
        break;
      }
    }
    if (rhs)
      for (const auto& h : fam.b) {
        std::size_t e = ext_dim(h, k2, 1);
        if (e != 0) {
          rhs = false;
          rhs_text = "B side: Ext^1_B(H2, ker f2) = " + str(e) + " for H2 = " + h.describe();
          break;
        }
      }
    if (rhs) rhs_text = "both components hold on the families";
  }
  r.add("f special precover <=> f1 special precover and f2 surjective with kernel in the perp", lhs_text,
        rhs_text, lhs == rhs);
  r.fact("special precover", lhs ? "yes" : "no");
  if (!lhs) r.fact("witness", lhs_text + "; " + rhs_text);
  return r;
}

std::optional<Morphism> construct_special_precover(const Setting& s, const Module& m) {
  if (gc_verdict(m, s.c_flat, s.bound) == Verdict::Certified) return Morphism::identity(m);
  auto res = homology::projective_resolution(m, 1);
  const Module& omega = res->syzygy(1);
  if (gc_verdict(omega, s.c_flat, s.bound) != Verdict::Certified) return std::nullopt;
  const Morphism& d0 = res->differential(0);
  const Morphism& incl = res->syzygy_inclusion(1);
  auto ap = relgor::minimal_approximation(omega, s.c_flat);
  // push out P <- Omega -> X
  const Module& p = res->term(0);
  const Module& x = ap.map.target();
  auto alg = m.algebra();
  auto sum = algebra::direct_sum({p, x}, alg);
  auto src = algebra::direct_sum({omega}, alg);
  Morphism j = algebra::block_morphism(src, sum, {{incl}, {ap.map.scaled(-linalg::Scalar::one(m.field()))}});
  auto e = algebra::cokernel_of(j);
  Morphism h = algebra::compose(d0, sum.projections[0]);
  std::vector<Matrix> maps;
  for (int v = 0; v < alg->num_vertices(); ++v) {
    const Matrix& q = e.map.at(v);
    if (q.rows() == 0) {
      maps.emplace_back(m.field(), m.dim(v), 0);
      continue;
    }
    auto right_inv = linalg::solve(q, Matrix::identity(m.field(), q.rows()));
    if (!right_inv) throw std::logic_error("pushout projection is not surjective");
    maps.push_back(h.at(v) * *right_inv);
  }
  return Morphism(e.module, m, maps);
}

Morphism broken_precover(const Setting& s, const Module& m) {
  auto pc = homology::projective_cover(m);
  const int na = s.ta.a_vertices();
  const auto alg = m.algebra();
  std::vector<int> keep;
  for (int v : pc.generators)
    if (v < na) keep.push_back(v);
  // generators sit in vertex order, so the A-vertex summands come first in every vertex block
  Module q = homology::free_module(alg, keep);
  std::vector<Matrix> maps;
  for (int w = 0; w < alg->num_vertices(); ++w) maps.push_back(Matrix::identity(m.field(), pc.cover.dim(w)).block(0, 0, pc.cover.dim(w), q.dim(w)));
  Morphism incl(q, pc.cover, maps);
  return algebra::compose(pc.map, incl);
}

}  // namespace trigor::trimat

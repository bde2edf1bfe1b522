#include "trigor/oracle/exhaustive.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "trigor/algebra/decompose.hpp"

namespace trigor::oracle {

using trimat::Setting;
using trimat::TriangleModule;
using trimat::Verdict;

namespace {

std::string str(std::size_t n) { return std::to_string(n); }

void absorb(ExhaustiveResult& out, const Report& r, const std::string& where) {
  ++out.cases;
  for (const auto& c : r.claims) {
    switch (c.status) {
      case ClaimStatus::Pass: ++out.passed; break;
      case ClaimStatus::Fail:
        ++out.failed;
        if (out.first_counter_witness.empty())
          out.first_counter_witness = where + ": " + c.what + " [" + c.lhs + " vs " + c.rhs + "]";
        break;
      case ClaimStatus::Skipped:
        if (c.note.rfind("hypothesis", 0) == 0)
          ++out.not_applicable;
        else
          ++out.indefinite;
        break;
    }
  }
}

struct Enumerations {
  std::vector<Module> a, b, t;
  std::size_t cap_a = 0, cap_b = 0;
};

Enumerations enumerate_sides(const Setting& s, const std::string& cap, std::uint64_t limit) {
  const auto& ta = s.ta;
  EnumerationCap tc = EnumerationCap::parse(cap, ta.T());
  const auto na = static_cast<std::size_t>(ta.a_vertices());
  EnumerationCap ac{{tc.dims.begin(), tc.dims.begin() + static_cast<long>(na)}, std::nullopt};
  EnumerationCap bc{{tc.dims.begin() + static_cast<long>(na), tc.dims.end()}, std::nullopt};
  Enumerations e;
  e.t = enumerate_modules(ta.T(), tc, limit);
  e.a = enumerate_modules(ta.A(), ac, limit);
  e.b = enumerate_modules(ta.B(), bc, limit);
  for (auto d : ac.dims) e.cap_a = std::max(e.cap_a, d);
  for (auto d : bc.dims) e.cap_b = std::max(e.cap_b, d);
  return e;
}

Verdict both(Verdict x, Verdict y) {
  if (x == Verdict::Refuted || y == Verdict::Refuted) return Verdict::Refuted;
  if (x == Verdict::Certified && y == Verdict::Certified) return Verdict::Certified;
  return Verdict::Inconclusive;
}

using Runner = std::function<void(const Setting&, const Enumerations&, ExhaustiveResult&)>;

void run_adjunctions(const Setting& s, const Enumerations& e, ExhaustiveResult& out) {
  std::vector<TriangleModule> ts;
  for (const auto& m : e.t) ts.push_back(trimat::flat_to_triple(s.ta, m));
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); ++j)
      absorb(out, trimat::check_adjunctions(s.ta, ts[i], ts[j]), "M = " + ts[i].describe() + ", N = " + ts[j].describe());
}

void run_triple_projectivity(const Setting& s, const Enumerations& e, ExhaustiveResult& out) {
  for (const auto& m : e.t) {
    TriangleModule t = trimat::flat_to_triple(s.ta, m);
    Report r;
    const bool pt = trimat::is_projective_triple(t), pf = algebra::is_projective(m);
    r.add("projective: triple criterion = flat", pt ? "yes" : "no", pf ? "yes" : "no", pt == pf);
    const bool it = trimat::is_injective_triple(s.ta, t), jf = algebra::is_injective(m);
    r.add("injective: triple criterion = flat", it ? "yes" : "no", jf ? "yes" : "no", it == jf);
    absorb(out, r, t.describe());
  }
}

// Each isomorphism depends on one component of one side, so the quantifier over pairs (M, N) reduces to
// component-by-module pairs.
void run_ext_isos(const Setting& s, const Enumerations& e, ExhaustiveResult& out) {
  using homology::ext_dim;
  const auto& ta = s.ta;
  const auto& u = ta.U();
  const Module za = Module::zero(ta.A()), zb = Module::zero(ta.B());
  constexpr std::size_t kDegrees = 3;
  std::vector<TriangleModule> ts;
  for (const auto& m : e.t) ts.push_back(trimat::flat_to_triple(ta, m));
  auto tor_free = [&](const Module& m1) {
    for (std::size_t i = 1; i <= kDegrees; ++i)
      if (homology::tor_dim(u, m1, i) != 0) return false;
    return true;
  };
  auto ext_free = [&](const Module& n2) {
    for (std::size_t i = 1; i <= kDegrees; ++i)
      if (ext_dim(u.as_left_module(), n2, i) != 0) return false;
    return true;
  };
  for (std::size_t n = 1; n <= kDegrees; ++n) {
    const std::string d = str(n);
    for (const auto& m1 : e.a) {
      Report r;
      const bool hyp = tor_free(m1);
      const Module pm = trimat::triple_to_flat(ta, trimat::functor_p(ta, m1, zb));
      for (std::size_t k = 0; k < ts.size(); ++k) {
        const std::string what = "(1) Ext^" + d + "_T((M1; U(x)M1), N) = Ext^" + d + "_A(M1, N1)";
        if (!hyp) {
          r.skip(what, "hypothesis fails: Tor_i(U, M1) != 0");
          continue;
        }
        std::size_t lhs = ext_dim(pm, e.t[k], n), rhs = ext_dim(m1, ts[k].m1, n);
        r.add(what + " for N = " + ts[k].describe(), str(lhs), str(rhs), lhs == rhs);
      }
      absorb(out, r, "M1 = " + m1.describe());
    }
    for (const auto& m2 : e.b) {
      Report r;
      const Module pm = trimat::triple_to_flat(ta, trimat::functor_p(ta, za, m2));
      for (std::size_t k = 0; k < ts.size(); ++k) {
        std::size_t lhs = ext_dim(pm, e.t[k], n), rhs = ext_dim(m2, ts[k].m2, n);
        r.add("(2) Ext^" + d + "_T((0; M2), N) = Ext^" + d + "_B(M2, N2) for N = " + ts[k].describe(), str(lhs), str(rhs),
              lhs == rhs);
      }
      absorb(out, r, "M2 = " + m2.describe());
    }
    for (const auto& n1 : e.a) {
      Report r;
      const Module rn = trimat::triple_to_flat(ta, trimat::functor_r(ta, n1, zb));
      for (std::size_t k = 0; k < ts.size(); ++k) {
        std::size_t lhs = ext_dim(e.t[k], rn, n), rhs = ext_dim(ts[k].m1, n1, n);
        r.add("(3) Ext^" + d + "_T(M, (N1; 0)) = Ext^" + d + "_A(M1, N1) for M = " + ts[k].describe(), str(lhs), str(rhs),
              lhs == rhs);
      }
      absorb(out, r, "N1 = " + n1.describe());
    }
    for (const auto& n2 : e.b) {
      Report r;
      const bool hyp = ext_free(n2);
      const Module hn = trimat::triple_to_flat(ta, trimat::functor_h(ta, za, n2));
      for (std::size_t k = 0; k < ts.size(); ++k) {
        const std::string what = "(4) Ext^" + d + "_T(M, (Hom_B(U,N2); N2)) = Ext^" + d + "_B(M2, N2)";
        if (!hyp) {
          r.skip(what, "hypothesis fails: Ext^i_B(U, N2) != 0");
          continue;
        }
        std::size_t lhs = ext_dim(e.t[k], hn, n), rhs = ext_dim(ts[k].m2, n2, n);
        r.add(what + " for M = " + ts[k].describe(), str(lhs), str(rhs), lhs == rhs);
      }
      absorb(out, r, "N2 = " + n2.describe());
    }
  }
}

void run_add_structure(const Setting& s, const Enumerations& e, ExhaustiveResult& out) {
  for (const auto& m : e.t) {
    TriangleModule t = trimat::flat_to_triple(s.ta, m);
    Report r;
    const auto a = trimat::add_membership_triple(s.ta, t, s.c1, s.c2);
    const bool flat = algebra::in_add(m, s.c_flat);
    r.add("X in add(C) <=> X = p(X1, X2) with X1 in add(C1), X2 in add(C2)", flat ? "in add(C)" : "not in add(C)",
          a.member ? "p-form" : a.reason, flat == a.member);
    absorb(out, r, t.describe());
  }
}

trimat::CompatibilityReport compat_of(const Setting& s, const Enumerations& e, ExhaustiveResult& out) {
  auto fam = trimat::default_families(s, e.cap_a, e.cap_b);
  auto c = trimat::compatibility_report(s, fam);
  out.report.fact("compatibility", trimat::compatibility_name(c.verdict) + (c.witness.empty() ? "" : " (" + c.witness + ")"));
  return c;
}

void run_p_preserves_gc(const Setting& s, const Enumerations& e, ExhaustiveResult& out) {
  auto compat = compat_of(s, e, out);
  const bool weak = compat.verdict == trimat::Compatibility::Compatible ||
                    compat.verdict == trimat::Compatibility::WeaklyCompatible;
  if (!weak) throw std::invalid_argument("p-preserves-gc: precondition: U is not certified weakly C-compatible");
  const bool tilting = relgor::is_w_tilting(s.c1, s.bound).kind == Verdict::Certified &&
                       relgor::is_w_tilting(s.c2, s.bound).kind == Verdict::Certified;
  for (const auto& m1 : e.a) {
    const Verdict v1 = trimat::gc_verdict(m1, s.c1, s.bound);
    for (const auto& m2 : e.b) {
      Report r;
      const Verdict pair = both(v1, trimat::gc_verdict(m2, s.c2, s.bound));
      const Verdict vp = trimat::gc_verdict(s.flat(trimat::functor_p(s.ta, m1, m2)), s.c_flat, s.bound);
      const std::string fwd = "M1, M2 relative Gorenstein projective => p(M1, M2) G_C-projective";
      const std::string back = "p(M1, M2) G_C-projective => M1, M2 relative Gorenstein projective";
      if (pair == Verdict::Certified) {
        if (vp == Verdict::Inconclusive)
          r.skip(fwd, "indefinite");
        else
          r.add(fwd, "certified", relgor::verdict_name(vp), vp == Verdict::Certified);
      }
      if (tilting && vp == Verdict::Certified) {
        if (pair == Verdict::Inconclusive)
          r.skip(back, "indefinite");
        else
          r.add(back, "certified", relgor::verdict_name(pair), pair == Verdict::Certified);
      }
      absorb(out, r, "M1 = " + m1.describe() + ", M2 = " + m2.describe());
    }
  }
}

void run_gc_structure(const Setting& s, const Enumerations& e, ExhaustiveResult& out) {
  auto compat = compat_of(s, e, out);
  for (const auto& m : e.t) {
    TriangleModule t = trimat::flat_to_triple(s.ta, m);
    absorb(out, trimat::gc_structure_check(s, compat, t), t.describe());
  }
}

void run_special_dims(const Setting& s, const Enumerations& e, ExhaustiveResult& out) {
  auto compat = compat_of(s, e, out);
  if (compat.verdict != trimat::Compatibility::Compatible)
    throw std::invalid_argument("special-dims: precondition: U is not certified C-compatible");
  // the two equalities are independent, so A- and B-modules are paired off by index
  const Module za = Module::zero(s.ta.A()), zb = Module::zero(s.ta.B());
  const std::size_t n = std::max(e.a.size(), e.b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Module& m1 = i < e.a.size() ? e.a[i] : za;
    const Module& m2 = i < e.b.size() ? e.b[i] : zb;
    absorb(out, trimat::special_dims_check(s, m1, m2), "M1 = " + m1.describe() + ", M2 = " + m2.describe());
  }
}

void run_pd_sandwich(const Setting& s, const Enumerations& e, ExhaustiveResult& out) {
  auto compat = compat_of(s, e, out);
  if (compat.verdict != trimat::Compatibility::Compatible)
    throw std::invalid_argument("pd-sandwich: precondition: U is not certified C-compatible");
  auto fam = trimat::default_families(s, e.cap_a, e.cap_b);
  auto sg = trimat::sgc_pd(s, fam.a);
  out.report.fact("SG", sg.to_string());
  for (const auto& m : e.t) {
    TriangleModule t = trimat::flat_to_triple(s.ta, m);
    absorb(out, trimat::dim_bounds_check(s, sg, t), t.describe());
  }
}

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> r{
      {"adjunctions", run_adjunctions},
      {"triple-projectivity", run_triple_projectivity},
      {"ext-isos", run_ext_isos},
      {"add-structure", run_add_structure},
      {"p-preserves-gc", run_p_preserves_gc},
      {"gc-structure", run_gc_structure},
      {"special-dims", run_special_dims},
      {"pd-sandwich", run_pd_sandwich},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& property_ids() {
  static const std::vector<std::string> ids{"adjunctions",    "triple-projectivity", "ext-isos",     "add-structure",
                                            "p-preserves-gc", "gc-structure",        "special-dims", "pd-sandwich"};
  return ids;
}

ExhaustiveResult exhaustive_check(const std::string& id, const Setting& s, const std::string& cap, std::uint64_t work_limit) {
  auto it = runners().find(id);
  if (it == runners().end()) {
    std::string known;
    for (const auto& k : property_ids()) known += (known.empty() ? "" : ", ") + k;
    throw std::invalid_argument("unknown property id \"" + id + "\" (known: " + known + ")");
  }
  ExhaustiveResult out;
  out.property = id;
  Enumerations e = enumerate_sides(s, cap, work_limit);
  out.report.title = "exhaustive " + id;
  out.report.family = "all modules within cap " + cap + ": " + str(e.t.size()) + " over T, " + str(e.a.size()) +
                      " over A, " + str(e.b.size()) + " over B";
  it->second(s, e, out);
  out.report.fact("cases", str(out.cases));
  out.report.fact("passed", str(out.passed));
  out.report.fact("failed", str(out.failed));
  out.report.fact("indefinite", str(out.indefinite));
  out.report.fact("hypothesis not met", str(out.not_applicable));
  if (!out.first_counter_witness.empty()) out.report.fact("first counter-witness", out.first_counter_witness);
  out.report.add("no counterexample among definite cases", str(out.failed) + " failures", "0 failures", out.failed == 0);
  return out;
}

}  // namespace trigor::oracle

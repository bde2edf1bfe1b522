#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigor/relgor/gc.hpp"
#include "trigor/report.hpp"
#include "trigor/trimat/triangle.hpp"

namespace trigor::trimat {

using relgor::GCDim;
using relgor::Verdict;

// C = p(C1, C2) over a fixed triangle, with the bound used by every semi-decision.
struct Setting {
  TriangleAlgebra ta;
  Module c1, c2;
  TriangleModule c;
  Module c_flat;
  std::size_t bound = relgor::kDefaultBound;

  static Setting make(TriangleAlgebra ta, Module c1, Module c2, std::size_t bound = relgor::kDefaultBound);
  // C = T
  static Setting regular(TriangleAlgebra ta, std::size_t bound = relgor::kDefaultBound);
  Module flat(const TriangleModule& m) const { return triple_to_flat(ta, m); }
};

// Finite stand-ins for G_{C1}P(A), G_{C2}P(B) and extra G_CP(T) members. Every member is Certified.
struct Families {
  std::vector<Module> a, b, t;
  std::string name;
  bool exhaustive = false;  // a and b are all Certified modules up to a cap
};
// Certified members among the enumerated modules up to the caps (finite fields); otherwise the
// indecomposable summands of C1, C2 and the projectives.
Families default_families(const Setting& s, std::size_t cap_a, std::size_t cap_b);

// Memoised is_gc_projective verdict.
Verdict gc_verdict(const Module& m, const Module& c, std::size_t bound);

Report check_adjunctions(const TriangleAlgebra& ta, const TriangleModule& m, const TriangleModule& n);
Report check_ext_isos(const TriangleAlgebra& ta, const TriangleModule& m, const TriangleModule& n, std::size_t degree);

struct AddMembership {
  bool member = false;
  std::string reason;
  std::optional<Morphism> comparison;  // flat X -> flat p(X1, coker phi)
  std::optional<Morphism> split;       // coker phi -> X2, a section of the projection
};
AddMembership add_membership_triple(const TriangleAlgebra& ta, const TriangleModule& x, const Module& c1, const Module& c2);

enum class Compatibility { Compatible, WeaklyCompatible, Refuted, Inconclusive };
std::string compatibility_name(Compatibility c);
struct CompatibilityReport {
  Compatibility verdict = Compatibility::Inconclusive;
  std::string witness;
  Report report;
};
CompatibilityReport compatibility_report(const Setting& s, const Families& f);

// Structure of G_C-projectives: flat verdict against the triple criterion.
Report gc_structure_check(const Setting& s, const CompatibilityReport& compat, const TriangleModule& m);
Report wtilting_transfer_check(const Setting& s, const CompatibilityReport& compat);
// CM-freeness of A, B and T relative to C1, C2 and C over the given enumerations.
Report cm_free_check(const Setting& s, const CompatibilityReport& compat, const std::vector<Module>& all_a,
                     const std::vector<Module>& all_b, const std::vector<Module>& all_t);

// f: G -> M given on the flat side.
Report special_precover_check(const Setting& s, const CompatibilityReport& compat, const Families& f, const Morphism& map);
// E -> M with kernel in add(C), for G_C-pd(M) <= 1; the identity when M is already G_C-projective.
std::optional<Morphism> construct_special_precover(const Setting& s, const Module& m);
// The projective cover restricted to its summands at A-vertices.
Morphism broken_precover(const Setting& s, const Module& m);

GCDim sgc_pd(const Setting& s, const std::vector<Module>& family_a);
Report dim_bounds_check(const Setting& s, const GCDim& sg, const TriangleModule& m);
Report special_dims_check(const Setting& s, const Module& m1, const Module& m2);
Report global_bounds_check(const Setting& s, const GCDim& sg, const std::vector<Module>& all_a,
                           const std::vector<Module>& all_b, const std::vector<Module>& all_t);

// Over T(R) with C = p(C1, C1): some (M;0) reaches G_{C1}-PD(R) + 1 and nothing exceeds it.
Report tr_formula_check(const AlgebraPtr& r, const Module& c1, std::size_t cap_r, std::size_t cap_t, std::size_t bound);

struct PdWitness {
  bool found = false;
  TriangleModule m;
  Module flat;
  std::size_t pd_t = 0, pd_m1 = 0, pd_coker = 0;
  std::size_t searched = 0;
  Report report;
};
// T(R)-module of projective dimension 2 whose components and first syzygy look projective-dimension-one.
// Throws std::invalid_argument unless gldim R = 1.
PdWitness pd_counterexample_search(const AlgebraPtr& r, const std::string& cap);

}  // namespace trigor::trimat

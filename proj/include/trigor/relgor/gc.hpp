#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trigor/algebra/decompose.hpp"
#include "trigor/homology/resolution.hpp"

namespace trigor::relgor {

using algebra::AddWitness;
using algebra::AlgebraPtr;
using algebra::Module;
using algebra::Morphism;
using homology::DimBound;
using linalg::Field;
using linalg::Matrix;

constexpr std::size_t kDefaultBound = 8;

// Ext^i(C, C) = 0 for 1 <= i <= bound.
bool is_sigma_self_orthogonal(const Module& c, std::size_t bound);

// ev: M -> C^d, d = dim Hom(M, C), components a Hom basis.
Morphism add_approximation(const Module& m, const Module& c);

// Left minimal add(C)-approximation M -> X, X a sum of indecomposable summands of C.
struct Approximation {
  Morphism map;
  std::vector<std::size_t> summand_class;  // class index (into the basic summands of C) per summand of X
};
Approximation minimal_approximation(const Module& m, const Module& c);

// Projective half: P_0 -> M, P_i -> P_{i-1}; syzygies Omega^0 = M .. Omega^k.
struct LeftWindow {
  std::vector<Module> terms;
  std::vector<Morphism> differentials;
  std::vector<Module> syzygies;
  std::vector<Morphism> inclusions;  // inclusions[i]: Omega^{i+1} -> P_i
  std::size_t closure = 0;           // k
  // Omega^k as a summand of (Omega^0 + .. + Omega^{k-1})^n; empty when Omega^k = 0.
  std::optional<AddWitness> closure_witness;
};

// add(C) half: a_j: M^j -> X^j injective approximations, pi_j: X^j -> M^{j+1} their cokernels.
struct RightWindow {
  std::vector<Module> cosyzygies;
  std::vector<Morphism> approximations;
  std::vector<Morphism> projections;
  std::vector<AddWitness> term_witnesses;  // X^j as a summand of C^n
  std::size_t closure = 0;
  std::optional<AddWitness> closure_witness;
};

struct Certificate {
  Module m, c;
  std::size_t bound = 0;
  LeftWindow left;
  RightWindow right;
  std::uint64_t digest = 0;
};

enum class Witness { W1, W2, W3 };
std::string witness_name(Witness w);

struct Refutation {
  Witness kind = Witness::W2;
  // W1: tower stage; W2: Ext degree; W3: joint (Omega^{degree} -> P_{degree-1}).
  std::size_t degree = 0;
  std::size_t dimension = 0;  // W1: kernel dim; W2: Ext dim; W3: rank deficit
  std::optional<Morphism> map;  // W1: the approximation; W3: the inclusion at the joint
  std::string detail;
};

enum class Verdict { Certified, Refuted, Inconclusive };
std::string verdict_name(Verdict v);

struct GCVerdict {
  Verdict kind = Verdict::Inconclusive;
  std::optional<Certificate> certificate;
  std::optional<Refutation> refutation;
  std::string note;

  bool certified() const { return kind == Verdict::Certified; }
  bool refuted() const { return kind == Verdict::Refuted; }
  std::string summary() const;
};

GCVerdict is_gc_projective(const Module& m, const Module& c, std::size_t bound = kDefaultBound);

// Independent re-check of a certificate: exactness by rank bookkeeping, Hom(-,C)-exactness by composing
// Hom bases, approximation property, add(C) and closure witnesses, digest.
struct Validation {
  bool ok = true;
  std::vector<std::string> failures;
  std::optional<Refutation> exactness_failure;  // first Hom(-,C)-exactness failure, as W3
};
Validation validate_certificate(const Certificate& cert);
std::uint64_t certificate_digest(const Certificate& cert);
// Re-checks a refutation against M and C on a separate route (W2 via the injective side).
bool recheck_refutation(const Module& m, const Module& c, const Refutation& r);

struct WTilting {
  Verdict kind = Verdict::Inconclusive;
  GCVerdict on_c, on_regular;
  std::string summary() const;
};
WTilting is_w_tilting(const Module& c, std::size_t bound = kDefaultBound);

struct GCDim {
  Verdict status = Verdict::Certified;  // Inconclusive when some syzygy test was
  DimBound value;
  std::string to_string() const;
};
// Least n with Omega^n certified. Throws std::invalid_argument("C not certified w-tilting").
GCDim gc_pd(const Module& m, const Module& c, std::size_t bound = kDefaultBound);

struct GCGlobalDim {
  Verdict status = Verdict::Certified;
  DimBound lower;     // max over the family
  bool exact = false;
  std::size_t family_size = 0;
};
// Family defaults to the simples when empty. `exhaustive` marks a family that enumerates every
// module up to a cap; the caller then accepts cap-relative exactness.
GCGlobalDim gc_global_dim(const AlgebraPtr& a, const Module& c, std::vector<Module> family,
                          std::size_t bound = kDefaultBound, bool exhaustive = false);

}  // namespace trigor::relgor

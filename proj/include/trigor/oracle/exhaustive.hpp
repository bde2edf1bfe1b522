#pragma once

#include <string>
#include <vector>

#include "trigor/oracle/enumerate.hpp"
#include "trigor/report.hpp"
#include "trigor/trimat/checks.hpp"

namespace trigor::oracle {

struct ExhaustiveResult {
  std::string property;
  std::size_t cases = 0;
  std::size_t passed = 0, failed = 0;
  std::size_t indefinite = 0;      // skipped for an Inconclusive verdict or a value beyond the bound
  std::size_t not_applicable = 0;  // skipped because a hypothesis fails
  std::string first_counter_witness;
  Report report;

  bool ok() const { return failed == 0; }
};

// Registered ids:
//   adjunctions         hom dimensions of p, h, r against their adjoints, all pairs
//   triple-projectivity triple and flat projectivity / injectivity agree
//   ext-isos            the four Ext isomorphisms in degrees 1..3, hypotheses permitting
//   add-structure       membership in add(C) against the p-form criterion
//   p-preserves-gc      p(M1, M2) relative Gorenstein projective iff M1 and M2 are
//   gc-structure        flat verdict against the triple criterion
//   special-dims        G_C-pd of (0; M2) and (M1; U(x)M1)
//   pd-sandwich         per-module bounds on G_C-pd(M) in terms of M1, M2 and SG
const std::vector<std::string>& property_ids();

// `cap` is parsed against the flat algebra of s.ta; the A and B enumerations use the matching halves.
// Throws std::invalid_argument for an unknown id.
ExhaustiveResult exhaustive_check(const std::string& id, const trimat::Setting& s, const std::string& cap,
                                  std::uint64_t work_limit = kDefaultWorkLimit);

}  // namespace trigor::oracle

#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "trigor/algebra/bimodule.hpp"
#include "trigor/algebra/module.hpp"

namespace trigor::homology {

using algebra::AlgebraPtr;
using algebra::Bimodule;
using algebra::Element;
using algebra::Module;
using algebra::Morphism;
using linalg::Field;
using linalg::Matrix;

struct ProjectiveCover {
  Module cover;                 // direct sum of P_v, one per generator
  Morphism map;                 // cover -> M, surjective, kernel inside the radical
  std::vector<int> generators;  // vertex of each summand, in summand order
};
ProjectiveCover projective_cover(const Module& m);
// Free module on the given vertex list and the total-space index of each generator e_v.
Module free_module(const AlgebraPtr& alg, const std::vector<int>& gens, std::vector<std::size_t>* generator_index = nullptr);

// Minimal projective resolution, extended on demand. Thread safe.
class Resolution {
 public:
  explicit Resolution(Module m);

  const Module& target() const { return target_; }
  // Makes P_0..P_n available.
  void extend_to(std::size_t n) const;
  std::size_t length() const;  // number of computed terms

  // All accessors extend as needed.
  const Module& term(std::size_t i) const;
  const std::vector<int>& generators(std::size_t i) const;
  // d(0) = P_0 -> M, d(i) = P_i -> P_{i-1}
  const Morphism& differential(std::size_t i) const;
  // Omega^0 = M; Omega^i (i >= 1) = ker d(i-1), with inclusion into P_{i-1}
  const Module& syzygy(std::size_t i) const;
  const Morphism& syzygy_inclusion(std::size_t i) const;
  // d(i) on generator k of P_i expressed as elements of A: coeff(i)[k][l] lies in e_{v_k} A e_{u_l}.
  const std::vector<std::vector<Element>>& coefficients(std::size_t i) const;
  // Least n with Omega^n = 0 among the computed terms up to `bound`.
  std::optional<std::size_t> projective_dimension(std::size_t bound) const;

 private:
  void step_locked() const;

  Module target_;
  mutable std::mutex mu_;
  // deques keep returned references valid while the resolution grows
  mutable std::deque<Module> terms_, syzygies_;
  mutable std::deque<std::vector<int>> gens_;
  mutable std::deque<Morphism> diffs_, incls_;
  mutable std::deque<std::vector<std::vector<Element>>> coeffs_;
};

using ResolutionPtr = std::shared_ptr<const Resolution>;
// Shared, cached by module content.
ResolutionPtr projective_resolution(const Module& m, std::size_t n = 0);
void clear_resolution_cache();
std::string module_key(const Module& m);

// Value or "at least bound + 1".
struct DimBound {
  std::optional<std::size_t> value;
  std::size_t bound = 0;
  bool exact() const { return value.has_value(); }
  std::string to_string() const;
  bool operator==(const DimBound& o) const { return value == o.value && (value || bound == o.bound); }
};

DimBound pd_up_to(const Module& m, std::size_t bound);
DimBound id_up_to(const Module& m, std::size_t bound);
DimBound gldim_up_to(const AlgebraPtr& a, std::size_t bound);

// Ext^i(M,N) as cohomology of Hom(P., N).
std::size_t ext_dim(const Module& m, const Module& n, std::size_t i);
// Same group via the opposite algebra: Ext^i(DN, DM), i.e. an injective coresolution of N.
std::size_t ext_dim_dual(const Module& m, const Module& n, std::size_t i);
// Tor_i^A(U, M) as homology of U (x) P.
std::size_t tor_dim(const Bimodule& u, const Module& m, std::size_t i);

}  // namespace trigor::homology

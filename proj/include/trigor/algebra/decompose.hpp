#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trigor/algebra/module.hpp"

namespace trigor::algebra {

// Subalgebra of n x n matrices spanned by `basis` (assumed closed under products and containing 1).
struct MatrixAlgebra {
  Field field;
  std::size_t n = 0;
  std::vector<Matrix> basis;
  Matrix columns;  // n^2 x d, vectorised basis

  static MatrixAlgebra of(Field f, std::size_t n, std::vector<Matrix> basis);
  static MatrixAlgebra endomorphisms(const Module& m);
  std::size_t dim() const { return basis.size(); }
  Matrix coords(const Matrix& x) const;  // d x 1, throws if x is outside
  Matrix element(const Matrix& coords) const;
};

// Jacobson radical as coefficient columns (d x r). Trace form in characteristic 0,
// lifted trace functionals (Ronyai) over F_p. Result re-checked to be a nilpotent ideal.
Matrix jacobson_radical(const MatrixAlgebra& e);

struct SplitResult {
  bool local = false;
  std::optional<Matrix> idempotent;  // nontrivial idempotent in E (n x n) when not local
};
// Decides whether E is local; otherwise returns a nontrivial idempotent.
// Over Q the division-algebra test is only complete when E/J is split; an undecided case throws.
SplitResult split_or_local(const MatrixAlgebra& e, std::uint64_t seed = 0);

struct Decomposition {
  std::vector<Module> summands;        // indecomposable, in discovery order
  std::vector<Morphism> inclusions;    // summand -> M; together an isomorphism
  std::vector<Morphism> projections;   // M -> summand, retractions matching the inclusions
  // Isomorphism classes: representative index into summands and multiplicity.
  std::vector<std::pair<std::size_t, std::size_t>> classes;
};
Decomposition decompose(const Module& m, std::uint64_t seed = 0);
bool is_indecomposable(const Module& m);

// Isomorphism between indecomposables, when one exists.
std::optional<Morphism> iso_indecomposable(const Module& x, const Module& y);
std::optional<Morphism> find_isomorphism(const Module& m, const Module& n);
bool is_isomorphic(const Module& m, const Module& n);

// X is a direct summand of C^k: ev: X -> C^k (k = dim Hom(X,C)) with a retraction.
struct AddWitness {
  std::size_t copies = 0;
  Morphism section;     // X -> C^k
  Morphism retraction;  // C^k -> X, retraction * section = id
};
std::optional<AddWitness> add_witness(const Module& x, const Module& c);
bool in_add(const Module& x, const Module& c);

}  // namespace trigor::algebra

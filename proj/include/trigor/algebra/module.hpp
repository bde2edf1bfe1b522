#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trigor/algebra/algebra.hpp"

namespace trigor::algebra {

// Representation of the quiver satisfying the relations. Immutable; copies share storage.
class Module {
 public:
  Module() = default;
  Module(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps);
  // Nullopt when the matrices violate a relation (or shapes are wrong).
  static std::optional<Module> try_make(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps);

  static Module zero(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return d_->alg; }
  Field field() const { return d_->alg->field(); }
  const std::vector<std::size_t>& dims() const { return d_->dims; }
  std::size_t dim(int v) const { return d_->dims[v]; }
  std::size_t total_dim() const { return d_->total; }
  std::size_t offset(int v) const { return d_->offsets[v]; }
  bool is_zero() const { return d_->total == 0; }
  const Matrix& arrow_map(int a) const { return d_->arrows[a]; }
  const std::vector<Matrix>& arrow_maps() const { return d_->arrows; }
  // Action of basis element i: dims[target] x dims[source].
  const Matrix& action(int i) const { return d_->actions[i]; }
  // Action of a general element on the whole space (block matrix, total x total).
  Matrix element_action(const Element& e) const;

  bool operator==(const Module& o) const;
  std::string describe() const;
  bool valid() const { return d_ != nullptr; }

 private:
  struct Data {
    AlgebraPtr alg;
    std::vector<std::size_t> dims;
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    std::vector<Matrix> arrows;
    std::vector<Matrix> actions;
  };
  static std::shared_ptr<Data> build(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps,
                                     std::string* error);
  std::shared_ptr<const Data> d_;
};

class Morphism {
 public:
  Morphism() = default;
  // Validates the intertwining relations.
  Morphism(Module source, Module target, std::vector<Matrix> maps);
  static Morphism unchecked(Module source, Module target, std::vector<Matrix> maps);
  static Morphism zero(const Module& source, const Module& target);
  static Morphism identity(const Module& m);
  // From a total-space matrix (target total x source total) that is block diagonal by vertex.
  static Morphism from_total(const Module& source, const Module& target, const Matrix& total, bool check = true);

  const Module& source() const { return src_; }
  const Module& target() const { return tgt_; }
  const Matrix& at(int v) const { return maps_[v]; }
  const std::vector<Matrix>& maps() const { return maps_; }
  Matrix total() const;

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_iso() const;
  bool intertwines() const;

  Morphism operator+(const Morphism& o) const;
  Morphism operator-(const Morphism& o) const;
  Morphism scaled(const Scalar& s) const;
  bool operator==(const Morphism& o) const;

 private:
  Module src_, tgt_;
  std::vector<Matrix> maps_;
};

// g after f
Morphism compose(const Morphism& g, const Morphism& f);
std::optional<Morphism> inverse(const Morphism& f);

// ---- Hom ----
std::vector<Morphism> hom_basis(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);
Morphism combine(const std::vector<Morphism>& basis, const std::vector<Scalar>& coeffs, const Module& m, const Module& n);

// ---- Sub and quotient ----
struct SubModule {
  Module module;
  Morphism map;  // inclusion for kernels/images/radicals, projection for cokernels/tops
};
SubModule kernel_of(const Morphism& f);
SubModule cokernel_of(const Morphism& f);
SubModule image_of(const Morphism& f);
// Submodule generated by per-vertex subspaces (columns); the given spaces must be closed under arrows.
SubModule submodule(const Module& m, const std::vector<Matrix>& subspaces);
SubModule quotient(const Module& m, const std::vector<Matrix>& subspaces);
SubModule radical(const Module& m);
SubModule top(const Module& m);
SubModule socle(const Module& m);
// Submodule generated by given vectors, each living at a vertex.
struct VertexVector {
  int vertex;
  Matrix vec;  // dims[vertex] x 1
};
SubModule generated_submodule(const Module& m, const std::vector<VertexVector>& gens);

// ---- Direct sums ----
struct DirectSum {
  Module sum;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};
DirectSum direct_sum(const std::vector<Module>& parts, AlgebraPtr alg);
Module direct_sum(const Module& a, const Module& b);
Module power(const Module& m, std::size_t k);
// Morphism between sums assembled from blocks; blocks[i][j]: parts_src[j] -> parts_tgt[i].
Morphism block_morphism(const DirectSum& src, const DirectSum& tgt, const std::vector<std::vector<std::optional<Morphism>>>& blocks);

// ---- Standard modules ----
Module simple(AlgebraPtr alg, int v);
std::vector<Module> simples(AlgebraPtr alg);
// A e_v; basis of vertex w is the list of basis elements with source v and target w (in algebra order).
Module projective(AlgebraPtr alg, int v);
std::vector<Module> projective_indecomposables(AlgebraPtr alg);
Module regular(AlgebraPtr alg);
// Vector space dual, a module over the opposite algebra.
Module dual(const Module& m);
Morphism dual(const Morphism& f);
// D(e_v A) = dual of the projective over the opposite algebra.
Module injective(AlgebraPtr alg, int v);
std::vector<Module> injective_indecomposables(AlgebraPtr alg);

bool is_projective(const Module& m);
bool is_injective(const Module& m);
// Dimension vector of top(m).
std::vector<std::size_t> top_dims(const Module& m);

// ---- Changing the basis ----
// The module transported along per-vertex invertible matrices g_v (new = g * old * g^-1).
Module transport(const Module& m, const std::vector<Matrix>& g);

}  // namespace trigor::algebra

#pragma once

#include <vector>

#include "trigor/algebra/module.hpp"

namespace trigor::algebra {

// (B,A)-bimodule. Elements are columns; b.u = left(b) u and u.a = right(a) u.
// Stored on a basis adapted to the idempotents: every basis vector lies in some e_w U e_v,
// ordered by (w, v).
class Bimodule {
 public:
  Bimodule() = default;
  // Validates and re-bases onto an adapted basis; basis_change() maps adapted coordinates to the given ones.
  static Bimodule make(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Matrix> left_action,
                       std::vector<Matrix> right_action);
  static Bimodule regular(AlgebraPtr a);
  static Bimodule zero(AlgebraPtr left, AlgebraPtr right);
  // S as (S,R)-bimodule through theta (dim S x dim R, columns are images of R's basis).
  static Bimodule from_morphism(AlgebraPtr s, AlgebraPtr r, const Matrix& theta);

  const AlgebraPtr& left_algebra() const { return left_alg_; }
  const AlgebraPtr& right_algebra() const { return right_alg_; }
  Field field() const { return left_alg_->field(); }
  std::size_t dim() const { return dim_; }
  const Matrix& left(int b) const { return left_[b]; }
  const Matrix& right(int a) const { return right_[a]; }
  int left_vertex(std::size_t i) const { return lv_[i]; }
  int right_vertex(std::size_t i) const { return rv_[i]; }
  const Matrix& basis_change() const { return basis_change_; }

  // U as a left B-module and as a left A^op-module.
  Module as_left_module() const;
  Module as_right_module() const;

 private:
  AlgebraPtr left_alg_, right_alg_;
  std::size_t dim_ = 0;
  std::vector<Matrix> left_, right_;
  std::vector<int> lv_, rv_;
  Matrix basis_change_;
};

// U (x)_A M as a quotient of the pairs u_i (x) m_j with matching vertices, per B-vertex.
struct Tensor {
  Module module;
  // total(module) x (dim U * total M); index of u_i (x) m_j is i * total M + j.
  Matrix surjection;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs;  // per B-vertex
  std::vector<Matrix> projection, section;                              // pair space <-> module at w
};
Tensor tensor_over(const Bimodule& u, const Module& m);
Morphism tensor_map(const Bimodule& u, const Morphism& f, const Tensor& src, const Tensor& tgt);
Morphism tensor_map(const Bimodule& u, const Morphism& f);

// Hom_B(U, N) as a left A-module via (a.g)(u) = g(u.a).
struct HomFromU {
  Module module;
  // maps[v][k]: total(N) x dim U, the k-th basis vector at A-vertex v
  std::vector<std::vector<Matrix>> maps;
};
HomFromU hom_from_bimodule(const Bimodule& u, const Module& n);
// Hom_B(U, f) between the computed Hom modules.
Morphism hom_from_bimodule_map(const Bimodule& u, const Morphism& f, const HomFromU& src, const HomFromU& tgt);
// Evaluation U (x)_A Hom_B(U,N) -> N.
Morphism evaluation(const Bimodule& u, const HomFromU& h, const Tensor& t, const Module& n);

}  // namespace trigor::algebra

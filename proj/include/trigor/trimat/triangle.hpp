#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "trigor/algebra/bimodule.hpp"

namespace trigor::trimat {

using algebra::AlgebraPtr;
using algebra::Bimodule;
using algebra::Module;
using algebra::Morphism;
using algebra::Tensor;
using linalg::Field;
using linalg::Matrix;

// T = [[A, 0], [U, B]] with U a (B, A)-bimodule. The flat algebra has the A-vertices first, then the
// B-vertices; a basis element u of e_w U e_v is an arrow-like element from A-vertex v to B-vertex w.
class TriangleAlgebra {
 public:
  static TriangleAlgebra make(AlgebraPtr a, AlgebraPtr b, Bimodule u, std::string name = "");
  // T(R) = [[R, 0], [R, R]]
  static TriangleAlgebra of_algebra(AlgebraPtr r, std::string name = "");

  const AlgebraPtr& A() const { return d_->a; }
  const AlgebraPtr& B() const { return d_->b; }
  const Bimodule& U() const { return d_->u; }
  const AlgebraPtr& T() const { return d_->t; }
  Field field() const { return d_->a->field(); }
  int a_vertices() const { return d_->a->num_vertices(); }
  int b_vertex(int w) const { return a_vertices() + w; }

  // Total-space action on a flat module of the structure basis element k
  // (A basis, then B basis, then U basis).
  Matrix structure_action(const Module& flat, int k) const;
  std::size_t structure_dim() const { return d_->old_to_new.cols(); }
  std::size_t a_offset() const { return 0; }
  std::size_t b_offset() const { return static_cast<std::size_t>(d_->a->dim()); }
  std::size_t u_offset() const { return static_cast<std::size_t>(d_->a->dim() + d_->b->dim()); }
  const Matrix& new_to_old() const { return d_->new_to_old; }
  const Matrix& old_to_new() const { return d_->old_to_new; }

 private:
  struct Data {
    AlgebraPtr a, b, t;
    Bimodule u;
    Matrix old_to_new, new_to_old;
  };
  std::shared_ptr<const Data> d_;
};

// (M1; M2) with phi: U (x)_A M1 -> M2.
struct TriangleModule {
  Module m1, m2;
  Morphism phi;
  std::shared_ptr<const Tensor> tensor;  // U (x) M1, phi.source() == tensor->module

  static TriangleModule make(const TriangleAlgebra& ta, Module m1, Module m2, Morphism phi);
  // From the actions of the U basis on M1: act[i] is total(M2) x total(M1).
  static TriangleModule from_u_action(const TriangleAlgebra& ta, Module m1, Module m2, const std::vector<Matrix>& act);
  static TriangleModule zero(const TriangleAlgebra& ta);

  // u_i . m as a total(M2) x total(M1) matrix.
  Matrix u_action(std::size_t i) const;
  std::size_t total_dim() const { return m1.total_dim() + m2.total_dim(); }
  std::string describe() const;
};

struct TriangleMorphism {
  Morphism f1, f2;
  // f2 . phi^M = phi^N . (U (x) f1)
  bool commutes(const TriangleAlgebra& ta, const TriangleModule& src, const TriangleModule& tgt) const;
};

Module triple_to_flat(const TriangleAlgebra& ta, const TriangleModule& m);
TriangleModule flat_to_triple(const TriangleAlgebra& ta, const Module& n);
Morphism triple_to_flat(const TriangleAlgebra& ta, const TriangleMorphism& f, const Module& src, const Module& tgt);
TriangleMorphism flat_to_triple(const TriangleAlgebra& ta, const Morphism& f);

// The functors between T-Mod and A-Mod x B-Mod.
TriangleModule functor_p(const TriangleAlgebra& ta, const Module& m1, const Module& m2);
std::pair<Module, Module> functor_q(const TriangleModule& m);
TriangleModule functor_h(const TriangleAlgebra& ta, const Module& m1, const Module& m2);
TriangleModule functor_r(const TriangleAlgebra& ta, const Module& m1, const Module& m2);
std::pair<Module, Module> functor_s(const TriangleModule& m);
TriangleMorphism functor_p(const TriangleAlgebra& ta, const Morphism& f1, const Morphism& f2);

// Coker phi with its projection from M2.
algebra::SubModule cokernel_of_phi(const TriangleModule& m);
// phi~: M1 -> Hom_B(U, M2), adjoint to phi.
Morphism phi_adjoint(const TriangleAlgebra& ta, const TriangleModule& m, const algebra::HomFromU& h);

// Projectivity and injectivity tests on the triple side.
bool is_projective_triple(const TriangleModule& m);
bool is_injective_triple(const TriangleAlgebra& ta, const TriangleModule& m);

// T(theta) = [[R, 0], [S, S]] for a unital algebra map theta: R -> S (dim S x dim R, columns images
// of R's basis). Throws when S is not flat (projective) as a right R-module.
TriangleAlgebra build_T_theta(AlgebraPtr r, AlgebraPtr s, const Matrix& theta, std::string name = "");

}  // namespace trigor::trimat

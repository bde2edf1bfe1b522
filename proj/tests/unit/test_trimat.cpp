#include <random>

#include "doctest.h"
#include "trigor/algebra/decompose.hpp"
#include "trigor/homology/resolution.hpp"
#include "trigor/trimat/triangle.hpp"

using namespace trigor::algebra;
using namespace trigor::trimat;

namespace {

Field F2 = Field::prime(2), F3 = Field::prime(3), Q = Field::rationals();

std::vector<TriangleAlgebra> small_triangles() {
  std::vector<TriangleAlgebra> out;
  out.push_back(TriangleAlgebra::of_algebra(path_algebra_An(F2, 2)));
  out.push_back(TriangleAlgebra::of_algebra(dual_numbers(F3)));
  auto a2 = path_algebra_An(Q, 2);
  out.push_back(TriangleAlgebra::make(a2, semisimple(Q, 1), Bimodule::make(semisimple(Q, 1), a2, 1,
                                                                               {Matrix::identity(Q, 1)},
                                                                               {Matrix::from_rows(Q, {{1}}),
                                                                                Matrix::from_rows(Q, {{0}}),
                                                                                Matrix::from_rows(Q, {{0}})})));
  return out;
}

std::vector<TriangleModule> sample_triples(const TriangleAlgebra& ta) {
  std::vector<TriangleModule> out;
  std::vector<Module> as, bs;
  for (auto& m : projective_indecomposables(ta.A())) as.push_back(m);
  for (auto& m : simples(ta.A())) as.push_back(m);
  for (auto& m : injective_indecomposables(ta.B())) bs.push_back(m);
  for (auto& m : simples(ta.B())) bs.push_back(m);
  for (const auto& a : as)
    for (const auto& b : bs) {
      out.push_back(functor_p(ta, a, b));
      out.push_back(functor_h(ta, a, b));
      out.push_back(functor_r(ta, a, b));
    }
  return out;
}

}  // namespace

TEST_CASE("flat algebra shape") {
  auto ta = TriangleAlgebra::of_algebra(path_algebra_An(F2, 2));
  CHECK(ta.T()->dim() == 9);
  CHECK(ta.T()->num_vertices() == 4);
  CHECK(trigor::homology::gldim_up_to(ta.T(), 5).value == 2u);
  auto td = TriangleAlgebra::of_algebra(dual_numbers(F3));
  CHECK(td.T()->dim() == 6);
  CHECK(td.T()->num_vertices() == 2);
  CHECK_FALSE(trigor::homology::gldim_up_to(td.T(), 4).exact());
  for (const auto& t : small_triangles()) CHECK(t.T()->dim() == t.A()->dim() + t.B()->dim() + static_cast<int>(t.U().dim()));
}

TEST_CASE("regular module is p(A, B)") {
  for (const auto& ta : small_triangles()) {
    Module t = regular(ta.T());
    TriangleModule tr = flat_to_triple(ta, t);
    CHECK(is_isomorphic(tr.m1, regular(ta.A())));
    CHECK(is_isomorphic(tr.m2, direct_sum(ta.U().as_left_module(), regular(ta.B()))));
    CHECK(tr.phi.is_injective());
    CHECK(is_isomorphic(triple_to_flat(ta, functor_p(ta, regular(ta.A()), regular(ta.B()))), t));
  }
}

TEST_CASE("triple and flat round trips") {
  for (const auto& ta : small_triangles())
    for (const auto& m : sample_triples(ta)) {
      Module flat = triple_to_flat(ta, m);
      TriangleModule back = flat_to_triple(ta, flat);
      CHECK(back.m1 == m.m1);
      CHECK(back.m2 == m.m2);
      CHECK(back.phi == m.phi);
      CHECK(triple_to_flat(ta, back) == flat);
    }
}

TEST_CASE("projective and injective triples") {
  for (const auto& ta : small_triangles()) {
    for (const auto& p : projective_indecomposables(ta.T())) CHECK(is_projective_triple(flat_to_triple(ta, p)));
    for (const auto& i : injective_indecomposables(ta.T())) CHECK(is_injective_triple(ta, flat_to_triple(ta, i)));
    for (const auto& m : sample_triples(ta)) {
      Module flat = triple_to_flat(ta, m);
      CHECK(is_projective_triple(m) == is_projective(flat));
      CHECK(is_injective_triple(ta, m) == is_injective(flat));
    }
  }
}

TEST_CASE("adjunction dimensions") {
  for (const auto& ta : small_triangles()) {
    auto ts = sample_triples(ta);
    std::vector<std::pair<Module, Module>> pairs;
    for (auto& a : simples(ta.A()))
      for (auto& b : projective_indecomposables(ta.B())) pairs.emplace_back(a, b);
    for (const auto& m : ts) {
      Module flat = triple_to_flat(ta, m);
      for (const auto& [x1, x2] : pairs) {
        CHECK(hom_dim(triple_to_flat(ta, functor_p(ta, x1, x2)), flat) == hom_dim(x1, m.m1) + hom_dim(x2, m.m2));
        CHECK(hom_dim(flat, triple_to_flat(ta, functor_h(ta, x1, x2))) == hom_dim(m.m1, x1) + hom_dim(m.m2, x2));
        CHECK(hom_dim(flat, triple_to_flat(ta, functor_r(ta, x1, x2))) ==
              hom_dim(m.m1, x1) + hom_dim(cokernel_of_phi(m).module, x2));
      }
    }
  }
}

TEST_CASE("morphisms of triples") {
  auto ta = TriangleAlgebra::of_algebra(path_algebra_An(F3, 2));
  Module s1 = simple(ta.A(), 0), p1 = projective(ta.A(), 0), p2 = projective(ta.A(), 1);
  auto pc = trigor::homology::projective_cover(s1);
  TriangleMorphism f = functor_p(ta, pc.map, Morphism::identity(p2));
  TriangleModule src = functor_p(ta, pc.cover, p2), tgt = functor_p(ta, s1, p2);
  CHECK(f.commutes(ta, src, tgt));
  Morphism flat = triple_to_flat(ta, f, triple_to_flat(ta, src), triple_to_flat(ta, tgt));
  CHECK(flat.is_surjective());
  TriangleMorphism back = flat_to_triple(ta, flat);
  CHECK(back.f1 == f.f1);
  CHECK(back.f2 == f.f2);
  // a non-commuting pair
  TriangleModule r = functor_r(ta, p1, p1);
  TriangleModule p = functor_p(ta, p1, Module::zero(ta.B()));
  TriangleMorphism bad{Morphism::identity(p1), Morphism::zero(p.m2, r.m2)};
  CHECK(bad.commutes(ta, p, r));
  TriangleMorphism bad2{Morphism::identity(p1), Morphism::zero(r.m2, p.m2)};
  CHECK_FALSE(bad2.commutes(ta, r, p));
}

TEST_CASE("T(theta) flatness") {
  auto r = semisimple(F2, 1);
  auto s = dual_numbers(F2);
  Matrix theta = Matrix::from_rows(F2, {{1}, {0}});
  auto ta = build_T_theta(r, s, theta);
  CHECK(ta.T()->dim() == 1 + 2 + 2);
  // k[x]/x^2 over itself through the identity is flat
  CHECK_NOTHROW(build_T_theta(s, s, Matrix::identity(F2, 2)));
  // A2 -> k x k onto the vertices: k x k is not projective over A2 on the right
  auto a2 = path_algebra_An(F2, 2);
  auto kk = semisimple(F2, 2);
  Matrix th(F2, 2, 3);
  th.set(0, a2->idempotent(0), 1);
  th.set(1, a2->idempotent(1), 1);
  CHECK_THROWS_AS(build_T_theta(a2, kk, th), std::invalid_argument);
}

#include <random>

#include "doctest.h"
#include "trigor/algebra/bimodule.hpp"
#include "trigor/algebra/decompose.hpp"

using namespace trigor::algebra;

namespace {

Field F2 = Field::prime(2), F3 = Field::prime(3), Q = Field::rationals();

// 1 -> 2 -> 3 with the composite killed
AlgebraPtr a3_rad2(Field f) {
  Relation r{{{0, 1}, Scalar::one(f)}};
  return Algebra::from_quiver(f, {"1", "2", "3"}, {{0, 1, "a"}, {1, 2, "b"}}, {r}, "A3/rad2");
}

Module rep_a2(AlgebraPtr a, std::size_t d1, std::size_t d2, const Matrix& m) { return Module(a, {d1, d2}, {m}); }

Module random_module_a2(AlgebraPtr a, std::mt19937& rng) {
  std::size_t d1 = rng() % 3, d2 = rng() % 3;
  Matrix m(a->field(), d2, d1);
  for (std::size_t i = 0; i < d2; ++i)
    for (std::size_t j = 0; j < d1; ++j) m.set(i, j, static_cast<long long>(rng() % 3));
  return rep_a2(a, d1, d2, m);
}

}  // namespace

TEST_CASE("bound quiver algebras") {
  auto a2 = path_algebra_An(F2, 2);
  CHECK(a2->dim() == 3);
  CHECK(a2->num_vertices() == 2);
  auto d = dual_numbers(Q);
  CHECK(d->dim() == 2);
  auto a3 = a3_rad2(F3);
  CHECK(a3->dim() == 5);
  CHECK(path_algebra_An(Q, 3)->dim() == 6);
  CHECK_NOTHROW(a3->validate());
  // x^3 = 0 on a loop: basis 1, x, x^2
  Relation x3{{{0, 0, 0}, Scalar::one(Q)}};
  CHECK(Algebra::from_quiver(Q, {"1"}, {{0, 0, "x"}}, {x3})->dim() == 3);
  // no relation on a loop: infinite dimensional
  CHECK_THROWS(Algebra::from_quiver(Q, {"1"}, {{0, 0, "x"}}, {}));
  // commutative square
  Relation comm{{{0, 2}, Scalar::one(Q)}, {{1, 3}, Scalar(Q, -1)}};
  auto sq = Algebra::from_quiver(Q, {"1", "2", "3", "4"}, {{0, 1, "a"}, {0, 2, "b"}, {1, 3, "c"}, {2, 3, "d"}}, {comm});
  CHECK(sq->dim() == 9);
  auto op = sq->opposite();
  CHECK(op->dim() == 9);
  CHECK(op->opposite().get() == sq.get());
}

TEST_CASE("from_structure recovers the quiver of an algebra") {
  auto a3 = a3_rad2(Q);
  Algebra::Structure s;
  s.field = Q;
  s.vertices = a3->vertices();
  for (const auto& b : a3->basis()) {
    s.source.push_back(b.source);
    s.target.push_back(b.target);
    s.labels.push_back(a3->basis_label(static_cast<int>(s.labels.size())));
  }
  for (int v = 0; v < a3->num_vertices(); ++v) s.idempotents.push_back(a3->idempotent(v));
  for (int i = 0; i < a3->dim(); ++i)
    for (int j = 0; j < a3->dim(); ++j) s.product.push_back(a3->product(i, j));
  auto pres = Algebra::from_structure(s);
  CHECK(pres.algebra->dim() == 5);
  CHECK(pres.algebra->num_arrows() == 2);
  CHECK((pres.old_to_new * pres.new_to_old).is_identity());
}

TEST_CASE("modules validate relations") {
  auto d = dual_numbers(F2);
  CHECK_NOTHROW(Module(d, {2}, {Matrix::from_rows(F2, {{0, 0}, {1, 0}})}));
  CHECK_THROWS(Module(d, {2}, {Matrix::from_rows(F2, {{1, 0}, {0, 0}})}));
  CHECK_FALSE(Module::try_make(d, {1}, {Matrix::from_rows(F2, {{1}})}).has_value());
  auto a2 = path_algebra_An(F2, 2);
  CHECK_THROWS(Module(a2, {1, 1}, {Matrix(F2, 2, 1)}));
}

TEST_CASE("hom examples") {
  auto a2 = path_algebra_An(F2, 2);
  Module p1 = projective(a2, 0), p2 = projective(a2, 1);
  CHECK(p1.dims() == std::vector<std::size_t>{1, 1});
  CHECK(p2.dims() == std::vector<std::size_t>{0, 1});
  CHECK(hom_dim(p1, p2) == 0);
  CHECK(hom_dim(p2, p1) == 1);
  CHECK(hom_dim(simple(a2, 0), simple(a2, 0)) == 1);
  for (const auto& h : hom_basis(p2, p1)) CHECK(h.intertwines());
}

TEST_CASE("kernels, cokernels, images") {
  auto a2 = path_algebra_An(F2, 2);
  Module p1 = projective(a2, 0), p2 = projective(a2, 1);
  Morphism inc = hom_basis(p2, p1).at(0);
  auto coker = cokernel_of(inc);
  CHECK(coker.module == simple(a2, 0));
  CHECK(kernel_of(Morphism::identity(p1)).module.is_zero());
  CHECK(cokernel_of(Morphism::zero(p2, p1)).module.dims() == p1.dims());
  // image = kernel of cokernel, compared by an invertible map
  std::mt19937 rng(1);
  auto a3 = a3_rad2(F3);
  Module m = regular(a3);
  for (int t = 0; t < 10; ++t) {
    auto hs = hom_basis(m, m);
    Morphism f = Morphism::zero(m, m);
    for (const auto& h : hs) f = f + h.scaled(Scalar(F3, static_cast<long long>(rng() % 3)));
    auto im = image_of(f);
    auto kc = kernel_of(cokernel_of(f).map);
    CHECK(im.module.dims() == kc.module.dims());
    CHECK(is_isomorphic(im.module, kc.module));
    CHECK(compose(cokernel_of(f).map, f).is_zero());
  }
}

TEST_CASE("radical, top, socle") {
  auto a2 = path_algebra_An(F2, 2);
  Module p1 = projective(a2, 0);
  CHECK(radical(p1).module.dims() == std::vector<std::size_t>{0, 1});
  CHECK(top(p1).module == simple(a2, 0));
  Module s = simple(a2, 1);
  CHECK(radical(s).module.is_zero());
  CHECK(top(s).module.dims() == s.dims());
  auto d = dual_numbers(F2);
  CHECK(radical(regular(d)).module.total_dim() == 1);
  CHECK(socle(regular(d)).module.total_dim() == 1);
}

TEST_CASE("duals and injectives") {
  auto a2 = path_algebra_An(F2, 2);
  Module i1 = injective(a2, 0), i2 = injective(a2, 1);
  CHECK(i1 == simple(a2, 0));
  CHECK(i2.dims() == std::vector<std::size_t>{1, 1});
  CHECK(is_isomorphic(i2, projective(a2, 0)));
  CHECK(dual(dual(i2)) == i2);
  CHECK(is_injective(i1));
  CHECK_FALSE(is_projective(i1));
  CHECK_FALSE(is_injective(projective(a2, 1)));
  std::mt19937 rng(4);
  for (int t = 0; t < 15; ++t) {
    Module m = random_module_a2(a2, rng), n = random_module_a2(a2, rng);
    CHECK(hom_dim(m, n) == hom_dim(dual(n), dual(m)));
  }
}

TEST_CASE("hom dimensions agree over F2, F3 and Q") {
  for (int v = 0; v < 3; ++v)
    for (int w = 0; w < 3; ++w) {
      std::size_t d2 = hom_dim(projective(a3_rad2(F2), v), injective(a3_rad2(F2), w));
      std::size_t d3 = hom_dim(projective(a3_rad2(F3), v), injective(a3_rad2(F3), w));
      std::size_t dq = hom_dim(projective(a3_rad2(Q), v), injective(a3_rad2(Q), w));
      CHECK(d2 == d3);
      CHECK(d3 == dq);
      CHECK(d2 == (v == w || w == v + 1 ? 1u : 0u));  // paths v -> w
    }
}

TEST_CASE("bimodules and tensor products") {
  auto d = dual_numbers(Q);
  auto r = Bimodule::regular(d);
  CHECK(r.dim() == 2);
  Module s = simple(d, 0);
  auto t = tensor_over(r, s);
  CHECK(t.module.total_dim() == 1);
  CHECK(is_isomorphic(t.module, s));
  CHECK(tensor_over(Bimodule::zero(d, d), s).module.is_zero());
  auto a3 = a3_rad2(F3);
  auto ra = Bimodule::regular(a3);
  Module m = regular(a3);
  CHECK(is_isomorphic(tensor_over(ra, m).module, m));
  CHECK(is_isomorphic(ra.as_left_module(), regular(a3)));
  CHECK(ra.as_right_module().total_dim() == 5);
  // bad bimodule: actions do not commute
  CHECK_THROWS(Bimodule::make(d, d, 2, {Matrix::identity(Q, 2), Matrix::from_rows(Q, {{0, 0}, {1, 0}})},
                              {Matrix::identity(Q, 2), Matrix::from_rows(Q, {{0, 1}, {0, 0}})}));
}

TEST_CASE("tensor is right exact on short exact sequences") {
  auto a2 = path_algebra_An(F3, 2);
  // U = A/rad A, so U (x) M = top M and the functor is not left exact
  std::vector<Matrix> acts;
  for (int i = 0; i < a2->dim(); ++i) {
    Matrix m(F3, 2, 2);
    if (a2->is_idempotent_index(i)) m.set(a2->basis()[i].source, a2->basis()[i].source, 1);
    acts.push_back(m);
  }
  auto u = Bimodule::make(a2, a2, 2, acts, acts);
  std::mt19937 rng(9);
  for (int t = 0; t < 10; ++t) {
    Module m = random_module_a2(a2, rng);
    // 0 -> rad M -> M -> top M -> 0
    auto rad = radical(m);
    auto tp = top(m);
    auto tm = tensor_over(u, m), tr = tensor_over(u, rad.module), tt = tensor_over(u, tp.module);
    Morphism f = tensor_map(u, rad.map, tr, tm), g = tensor_map(u, tp.map, tm, tt);
    CHECK(compose(g, f).is_zero());
    CHECK(g.is_surjective());
    CHECK(image_of(f).module.total_dim() == kernel_of(g).module.total_dim());
    CHECK(tm.module.dims() == tp.module.dims());
  }
}

TEST_CASE("Hom_B(U, N) and evaluation") {
  auto d = dual_numbers(F2);
  auto r = Bimodule::regular(d);
  Module n = regular(d);
  auto h = hom_from_bimodule(r, n);
  CHECK(is_isomorphic(h.module, n));
  auto t = tensor_over(r, h.module);
  Morphism ev = evaluation(r, h, t, n);
  CHECK(ev.is_iso());
  auto a2 = path_algebra_An(F2, 2);
  auto ra = Bimodule::regular(a2);
  Module i2 = injective(a2, 1);
  CHECK(is_isomorphic(hom_from_bimodule(ra, i2).module, i2));
}

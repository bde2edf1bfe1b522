#include <random>

#include "doctest.h"
#include "trigor/linalg/matrix.hpp"

using namespace trigor::linalg;

namespace {

Field Q = Field::rationals();

Matrix random_int_matrix(Field f, std::size_t r, std::size_t c, std::mt19937& rng, int range = 4) {
  Matrix m(f, r, c);
  std::uniform_int_distribution<int> d(-range, range);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, d(rng));
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic stays in its field") {
  Scalar a = Scalar::parse(Q, "-2/4");
  CHECK(a.to_string() == "-1/2");
  CHECK((a * Scalar(Q, -2)).is_one());
  Field f7 = Field::prime(7);
  Scalar b(f7, 10);
  CHECK(b.residue() == 3);
  CHECK((b * b.inverse()).is_one());
  CHECK(Scalar::parse(f7, "1/2").residue() == 4);
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_THROWS(Field::prime(9));
  CHECK_THROWS(Scalar(f7, 0).inverse());
}

TEST_CASE("rref examples") {
  auto e = rref(Matrix::identity(Q, 2));
  CHECK(e.reduced == Matrix::identity(Q, 2));
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  auto z = rref(Matrix(Q, 3, 2));
  CHECK(z.reduced.is_zero());
  CHECK(z.pivots.empty());
  auto r = rref(Matrix::from_rows(Q, {{1, 2}, {2, 4}}));
  CHECK(r.reduced == Matrix::from_rows(Q, {{1, 2}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(Matrix::hstack(Matrix(Q, 1, 1), Matrix(Field::prime(2), 1, 1)), FieldMismatch);
}

TEST_CASE("kernel and solve examples") {
  CHECK(kernel_basis(Matrix::identity(Q, 3)).cols() == 0);
  CHECK(kernel_basis(Matrix(Q, 3, 3)).cols() == 3);
  Field f2 = Field::prime(2);
  Matrix k = kernel_basis(Matrix::from_rows(f2, {{1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK(k == Matrix::from_rows(f2, {{1}, {1}}));
  Matrix b = Matrix::from_rows(Q, {{5}, {-1}});
  CHECK(*solve(Matrix::identity(Q, 2), b) == b);
  CHECK_FALSE(solve(Matrix(Q, 2, 2), b).has_value());
  CHECK(solve(Matrix::from_rows(Q, {{2}}), Matrix::from_rows(Q, {{3}}))->at(0, 0) == Scalar::parse(Q, "3/2"));
  CHECK_THROWS(solve(Matrix::identity(Q, 3), b));
}

TEST_CASE("empty shapes behave as zero maps") {
  Matrix a(Q, 0, 3), b(Q, 3, 0);
  CHECK((b * a).rows() == 3);
  CHECK((b * a).is_zero());
  CHECK((a * b).rows() == 0);
  CHECK(rank(a) == 0);
  CHECK(kernel_basis(a).cols() == 3);
  CHECK(solve(b, Matrix(Q, 3, 1)).has_value());
}

TEST_CASE("rank-nullity, exact solve, rref idempotence over several fields") {
  std::mt19937 rng(7);
  for (Field f : {Q, Field::prime(2), Field::prime(3), Field::prime(101), Field::prime(2147483647u)}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t r = rng() % 6, c = rng() % 6;
      Matrix m = random_int_matrix(f, r, c, rng);
      Matrix k = kernel_basis(m);
      CHECK(rank(m) + k.cols() == c);
      CHECK((m * k).is_zero());
      auto e = rref(m);
      CHECK(rref(e.reduced).reduced == e.reduced);
      for (std::size_t i = 1; i < e.pivots.size(); ++i) CHECK(e.pivots[i - 1] < e.pivots[i]);
      Matrix x = random_int_matrix(f, c, 1, rng);
      Matrix bb = m * x;
      auto s = solve(m, bb);
      REQUIRE(s.has_value());
      CHECK(m * *s == bb);
    }
  }
}

TEST_CASE("rref over Q is reproduced by the recorded row operations") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Matrix m = random_int_matrix(Q, r, c, rng, 9);
    // rref([m | I]) = [R | E] with E m = R and E invertible.
    auto e = rref(Matrix::hstack(m, Matrix::identity(Q, r)), c);
    Matrix R = e.reduced.block(0, 0, r, c), E = e.reduced.block(0, c, r, r);
    CHECK(E * m == R);
    CHECK(R == rref(m).reduced);
    auto Einv = inverse(E);
    REQUIRE(Einv.has_value());
    CHECK(*Einv * R == m);
  }
}

TEST_CASE("quotients, complements and inverses") {
  Field f3 = Field::prime(3);
  Matrix s = Matrix::from_rows(f3, {{1}, {1}, {0}});
  auto q = quotient_by(s, 3);
  CHECK(q.projection.rows() == 2);
  CHECK((q.projection * s).is_zero());
  CHECK((q.projection * q.section).is_identity());
  Matrix comp = complement_basis(s, 3);
  CHECK(rank(Matrix::hstack(s, comp)) == 3);
  Matrix m = Matrix::from_rows(Q, {{2, 1}, {1, 1}});
  CHECK(*inverse(m) * m == Matrix::identity(Q, 2));
  CHECK_FALSE(inverse(Matrix::from_rows(Q, {{1, 2}, {2, 4}})).has_value());
  CHECK(column_space_contains(m, Matrix::from_rows(Q, {{7}, {3}})));
}

TEST_CASE("direct sums, transpose and vectorisation") {
  Matrix a = Matrix::from_rows(Q, {{1, 2}}), b = Matrix::from_rows(Q, {{3}});
  Matrix d = Matrix::direct_sum(a, b);
  CHECK(d == Matrix::from_rows(Q, {{1, 2, 0}, {0, 0, 3}}));
  CHECK(d.transpose().transpose() == d);
  CHECK(a.vectorize() == Matrix::from_rows(Q, {{1}, {2}}));
  CHECK(Matrix::from_strings(Q, 1, 2, {"1/2", "-3"}).at(0, 0) == Scalar::parse(Q, "1/2"));
}

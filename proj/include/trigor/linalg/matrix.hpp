#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trigor/linalg/scalar.hpp"

namespace trigor::linalg {

// Dense row-major matrix over Q or F_p. 0xn and nx0 shapes are legal.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_ints(Field f, std::size_t rows, std::size_t cols, const std::vector<long long>& row_major);
  static Matrix from_rows(Field f, const std::vector<std::vector<long long>>& rows);
  static Matrix from_strings(Field f, std::size_t rows, std::size_t cols, const std::vector<std::string>& row_major);
  static Matrix column(const std::vector<Scalar>& entries, Field f);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& s);
  void set(std::size_t i, std::size_t j, long long v);
  bool entry_is_zero(std::size_t i, std::size_t j) const;
  // dst(i,j) += s * other(k,l); used by block assembly without Scalar round trips.
  void add_scaled_entry(std::size_t i, std::size_t j, const Scalar& s);

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  void add_block(std::size_t r0, std::size_t c0, const Matrix& b, const Scalar& s);
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix column_at(std::size_t j) const { return block(0, j, rows_, 1); }

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix hstack(const std::vector<Matrix>& parts, Field f, std::size_t rows);
  static Matrix vstack(const std::vector<Matrix>& parts, Field f, std::size_t cols);
  static Matrix direct_sum(const Matrix& a, const Matrix& b);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  bool operator==(const Matrix& o) const;

  // Column-major vectorisation of all entries as a column.
  Matrix vectorize() const;

  std::span<std::uint32_t> residues() { return fp_; }
  std::span<const std::uint32_t> residues() const { return fp_; }
  std::vector<mpq_class>& rationals() { return q_; }
  const std::vector<mpq_class>& rationals() const { return q_; }

  std::string to_string() const;
  std::vector<std::string> to_strings() const;

 private:
  Field field_{};
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> fp_;
  std::vector<mpq_class> q_;
};

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form; pivots chosen as the first nonzero entry in column order.
// Pivots are only taken in the first `pivot_cols` columns when given.
Echelon rref(const Matrix& m, std::optional<std::size_t> pivot_cols = std::nullopt);
std::size_t rank(const Matrix& m);
// Columns form a basis of the null space.
Matrix kernel_basis(const Matrix& m);
// Linearly independent columns of m spanning its column space (pivot columns).
Matrix image_basis(const Matrix& m);
// Some X with m X = b (free variables 0) or nullopt.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
// Columns of `span` extended by standard basis vectors to a basis of k^n; returns the added columns.
Matrix complement_basis(const Matrix& span, std::size_t n);
// Rank of [a | b] equals rank(a)?
bool column_space_contains(const Matrix& a, const Matrix& b);

// Linear projection P: k^n -> k^(n - dim S) with kernel exactly col-span(S) (S given by independent columns),
// plus a section Q with P Q = id.
struct Quotient {
  Matrix projection;
  Matrix section;
};
Quotient quotient_by(const Matrix& subspace, std::size_t n);

}  // namespace trigor::linalg

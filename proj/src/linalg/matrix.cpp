#include "trigor/linalg/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "trigor/linalg/kernels.hpp"

namespace trigor::linalg {

namespace {

void check_shape(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("dimension mismatch in ") + what);
}

}  // namespace

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols) {
  if (f.is_finite())
    fp_.assign(rows * cols, 0);
  else
    q_.assign(rows * cols, mpq_class(0));
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_ints(Field f, std::size_t rows, std::size_t cols, const std::vector<long long>& v) {
  check_shape(v.size() == rows * cols, "from_ints");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, v[i * cols + j]);
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<long long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check_shape(rows[i].size() == c, "from_rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_strings(Field f, std::size_t rows, std::size_t cols, const std::vector<std::string>& v) {
  check_shape(v.size() == rows * cols, "from_strings");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, Scalar::parse(f, v[i * cols + j]));
  return m;
}

Matrix Matrix::column(const std::vector<Scalar>& entries, Field f) {
  Matrix m(f, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  if (field_.is_finite()) return Scalar::from_residue(field_, fp_[i * cols_ + j]);
  return Scalar::from_rational(field_, q_[i * cols_ + j]);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& s) {
  require_same_field(field_, s.field());
  if (field_.is_finite())
    fp_[i * cols_ + j] = s.residue();
  else
    q_[i * cols_ + j] = s.rational();
}

void Matrix::set(std::size_t i, std::size_t j, long long v) { set(i, j, Scalar(field_, v)); }

bool Matrix::entry_is_zero(std::size_t i, std::size_t j) const {
  return field_.is_finite() ? fp_[i * cols_ + j] == 0 : sgn(q_[i * cols_ + j]) == 0;
}

void Matrix::add_scaled_entry(std::size_t i, std::size_t j, const Scalar& s) {
  require_same_field(field_, s.field());
  if (field_.is_finite()) {
    std::uint64_t v = static_cast<std::uint64_t>(fp_[i * cols_ + j]) + s.residue();
    fp_[i * cols_ + j] = static_cast<std::uint32_t>(v % field_.p);
  } else {
    q_[i * cols_ + j] += s.rational();
  }
}

bool Matrix::is_zero() const {
  if (field_.is_finite()) {
    for (auto v : fp_)
      if (v) return false;
    return true;
  }
  for (const auto& v : q_)
    if (sgn(v)) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      bool z = entry_is_zero(i, j);
      if (i == j ? (z || !at(i, j).is_one()) : !z) return false;
    }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_finite())
        t.fp_[j * rows_ + i] = fp_[i * cols_ + j];
      else
        t.q_[j * rows_ + i] = q_[i * cols_ + j];
    }
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  check_shape(r0 + nr <= rows_ && c0 + nc <= cols_, "block");
  Matrix b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      if (field_.is_finite())
        b.fp_[i * nc + j] = fp_[(r0 + i) * cols_ + c0 + j];
      else
        b.q_[i * nc + j] = q_[(r0 + i) * cols_ + c0 + j];
    }
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require_same_field(field_, b.field_);
  check_shape(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, "set_block");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      if (field_.is_finite())
        fp_[(r0 + i) * cols_ + c0 + j] = b.fp_[i * b.cols_ + j];
      else
        q_[(r0 + i) * cols_ + c0 + j] = b.q_[i * b.cols_ + j];
    }
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& b, const Scalar& s) {
  require_same_field(field_, b.field_);
  check_shape(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, "add_block");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < b.rows_; ++i) {
    if (field_.is_finite()) {
      kernels::axpy_mod(&fp_[(r0 + i) * cols_ + c0], &b.fp_[i * b.cols_], s.residue(), field_.p, b.cols_);
    } else {
      for (std::size_t j = 0; j < b.cols_; ++j) q_[(r0 + i) * cols_ + c0 + j] += s.rational() * b.q_[i * b.cols_ + j];
    }
  }
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix m(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (field_.is_finite())
        m.fp_[i * idx.size() + j] = fp_[i * cols_ + idx[j]];
      else
        m.q_[i * idx.size() + j] = q_[i * cols_ + idx[j]];
    }
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix m(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) m.set_block(i, 0, block(idx[i], 0, 1, cols_));
  return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  check_shape(a.rows_ == b.rows_, "hstack");
  Matrix m(a.field_, a.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(0, a.cols_, b);
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  check_shape(a.cols_ == b.cols_, "vstack");
  Matrix m(a.field_, a.rows_ + b.rows_, a.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, 0, b);
  return m;
}

Matrix Matrix::hstack(const std::vector<Matrix>& parts, Field f, std::size_t rows) {
  std::size_t c = 0;
  for (const auto& p : parts) {
    check_shape(p.rows_ == rows, "hstack");
    c += p.cols_;
  }
  Matrix m(f, rows, c);
  c = 0;
  for (const auto& p : parts) {
    m.set_block(0, c, p);
    c += p.cols_;
  }
  return m;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts, Field f, std::size_t cols) {
  std::size_t r = 0;
  for (const auto& p : parts) {
    check_shape(p.cols_ == cols, "vstack");
    r += p.rows_;
  }
  Matrix m(f, r, cols);
  r = 0;
  for (const auto& p : parts) {
    m.set_block(r, 0, p);
    r += p.rows_;
  }
  return m;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  Matrix m(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, a.cols_, b);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(field_, o.field_);
  check_shape(cols_ == o.rows_, "product");
  Matrix c(field_, rows_, o.cols_);
  if (field_.is_finite()) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint32_t a = fp_[i * cols_ + k];
        if (a) kernels::axpy_mod(&c.fp_[i * o.cols_], &o.fp_[k * o.cols_], a, field_.p, o.cols_);
      }
  } else {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const mpq_class& a = q_[i * cols_ + k];
        if (sgn(a) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (sgn(o.q_[k * o.cols_ + j])) c.q_[i * o.cols_ + j] += a * o.q_[k * o.cols_ + j];
      }
  }
  return c;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_field(field_, o.field_);
  check_shape(rows_ == o.rows_ && cols_ == o.cols_, "sum");
  Matrix c = *this;
  c.add_block(0, 0, o, Scalar::one(field_));
  return c;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_field(field_, o.field_);
  check_shape(rows_ == o.rows_ && cols_ == o.cols_, "difference");
  Matrix c = *this;
  c.add_block(0, 0, o, -Scalar::one(field_));
  return c;
}

Matrix Matrix::scaled(const Scalar& s) const {
  require_same_field(field_, s.field());
  Matrix c = *this;
  if (field_.is_finite())
    kernels::scale_mod(c.fp_.data(), s.residue(), field_.p, c.fp_.size());
  else
    for (auto& v : c.q_) v *= s.rational();
  return c;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && fp_ == o.fp_ && q_ == o.q_;
}

Matrix Matrix::vectorize() const {
  Matrix v(field_, rows_ * cols_, 1);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) {
      if (field_.is_finite())
        v.fp_[j * rows_ + i] = fp_[i * cols_ + j];
      else
        v.q_[j * rows_ + i] = q_[i * cols_ + j];
    }
  return v;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).to_string();
  }
  os << "]";
  return os.str();
}

std::vector<std::string> Matrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(at(i, j).to_string());
  return out;
}

namespace {

void rref_fp(Matrix& m, std::size_t limit, std::vector<std::size_t>& pivots) {
  const std::uint32_t p = m.field().p;
  const std::size_t R = m.rows(), C = m.cols();
  auto a = m.residues();
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && a[piv * C + c] == 0) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(a[piv * C + j], a[r * C + j]);
    std::uint32_t inv = mod_inv(a[r * C + c], p);
    if (inv != 1) kernels::scale_mod(&a[r * C], inv, p, C);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      std::uint32_t f = a[i * C + c];
      if (f) kernels::axpy_mod(&a[i * C], &a[r * C], p - f, p, C);
    }
    pivots.push_back(c);
    ++r;
  }
}

void rref_q(Matrix& m, std::size_t limit, std::vector<std::size_t>& pivots) {
  const std::size_t R = m.rows(), C = m.cols();
  auto& a = m.rationals();
  std::size_t r = 0;
  mpq_class f;
  for (std::size_t c = 0; c < limit && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && sgn(a[piv * C + c]) == 0) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(a[piv * C + j], a[r * C + j]);
    mpq_class inv = 1 / a[r * C + c];
    for (std::size_t j = c; j < C; ++j)
      if (sgn(a[r * C + j])) a[r * C + j] *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || sgn(a[i * C + c]) == 0) continue;
      f = a[i * C + c];
      for (std::size_t j = c; j < C; ++j)
        if (sgn(a[r * C + j])) a[i * C + j] -= f * a[r * C + j];
    }
    pivots.push_back(c);
    ++r;
  }
}

}  // namespace

Echelon rref(const Matrix& m, std::optional<std::size_t> pivot_cols) {
  Echelon e{m, {}};
  std::size_t limit = pivot_cols ? std::min(*pivot_cols, m.cols()) : m.cols();
  if (m.field().is_finite())
    rref_fp(e.reduced, limit, e.pivots);
  else
    rref_q(e.reduced, limit, e.pivots);
  return e;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  if (m.rows() < m.cols()) return rref(m.transpose()).pivots.size();
  return rref(m).pivots.size();
}

Matrix kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(m.field(), n, free.size());
  for (std::size_t t = 0; t < free.size(); ++t) {
    k.set(free[t], t, 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (!e.reduced.entry_is_zero(r, free[t])) k.set(e.pivots[r], t, -e.reduced.at(r, free[t]));
  }
  return k;
}

Matrix image_basis(const Matrix& m) { return m.select_columns(rref(m).pivots); }

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  require_same_field(m.field(), b.field());
  check_shape(m.rows() == b.rows(), "solve");
  const std::size_t n = m.cols();
  Echelon e = rref(Matrix::hstack(m, b), n);
  const std::size_t rk = e.pivots.size();
  for (std::size_t r = rk; r < e.reduced.rows(); ++r)
    for (std::size_t j = n; j < n + b.cols(); ++j)
      if (!e.reduced.entry_is_zero(r, j)) return std::nullopt;
  Matrix x(m.field(), n, b.cols());
  for (std::size_t r = 0; r < rk; ++r) x.set_block(e.pivots[r], 0, e.reduced.block(r, n, 1, b.cols()));
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.field(), m.rows()));
}

Matrix complement_basis(const Matrix& span, std::size_t n) {
  check_shape(span.rows() == n, "complement_basis");
  Echelon e = rref(span.transpose());
  std::vector<bool> used(n, false);
  for (auto c : e.pivots) used[c] = true;
  std::vector<std::size_t> extra;
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) extra.push_back(i);
  Matrix c(span.field(), n, extra.size());
  for (std::size_t t = 0; t < extra.size(); ++t) c.set(extra[t], t, 1);
  return c;
}

bool column_space_contains(const Matrix& a, const Matrix& b) {
  if (b.cols() == 0) return true;
  return rank(Matrix::hstack(a, b)) == rank(a);
}

Quotient quotient_by(const Matrix& subspace, std::size_t n) {
  check_shape(subspace.rows() == n, "quotient_by");
  Matrix s = image_basis(subspace);
  Matrix comp = complement_basis(s, n);
  Matrix full = Matrix::hstack(s, comp);
  auto inv = inverse(full);
  if (!inv) throw std::logic_error("quotient_by: basis completion is singular");
  return Quotient{inv->block(s.cols(), 0, comp.cols(), n), comp};
}

}  // namespace trigor::linalg

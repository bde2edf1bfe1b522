#include <algorithm>
#include <random>
#include <stdexcept>

#include "trigor/algebra/decompose.hpp"

namespace trigor::algebra {

namespace {

using Poly = std::vector<Scalar>;  // low degree first, trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Poly poly_sub(Poly a, const Poly& b, Field f) {
  if (a.size() < b.size()) a.resize(b.size(), Scalar::zero(f));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, Field f) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Scalar::zero(f));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

Poly poly_mod(Poly a, const Poly& m) {
  const std::size_t dm = m.size() - 1;
  Scalar lead_inv = m.back().inverse();
  while (a.size() > dm) {
    Scalar q = a.back() * lead_inv;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] -= q * m[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_monic(Poly a) {
  if (a.empty()) return a;
  Scalar inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

Poly poly_derivative(const Poly& a, Field f) {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * Scalar(f, static_cast<long long>(i)));
  trim(d);
  return d;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, Field f) {
  Poly r{Scalar::one(f)};
  base = poly_mod(base, m);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, f), m);
    base = poly_mod(poly_mul(base, base, f), m);
    e >>= 1;
  }
  return r;
}

Scalar poly_eval(const Poly& a, const Scalar& x, Field f) {
  Scalar r = Scalar::zero(f);
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
  return r;
}

// One root of a squarefree product of distinct linear factors over F_p (p odd, large).
std::optional<Scalar> split_linear_root(Poly g, Field f) {
  for (std::uint64_t a = 1; g.size() > 2 && a < 200; ++a) {
    Poly xa{Scalar(f, static_cast<long long>(a)), Scalar::one(f)};
    Poly h = poly_powmod(xa, (f.p - 1) / 2, g, f);
    h = poly_sub(h, Poly{Scalar::one(f)}, f);
    Poly d = poly_gcd(g, h);
    if (d.size() > 1 && d.size() < g.size()) g = d.size() <= g.size() / 2 + 1 ? d : d;
  }
  if (g.size() == 2) return -g[0] / g[1];
  return std::nullopt;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  if (n == 0 || n > mpz_class("1000000000000")) return out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

std::optional<Scalar> find_root(const Poly& f0, Field f) {
  Poly g = poly_monic(f0);
  if (g.size() < 2) return std::nullopt;
  if (g[0].is_zero()) return Scalar::zero(f);
  if (f.is_finite()) {
    if (f.p <= 257) {
      for (std::uint32_t l = 0; l < f.p; ++l)
        if (poly_eval(g, Scalar::from_residue(f, l), f).is_zero()) return Scalar::from_residue(f, l);
      return std::nullopt;
    }
    Poly xp = poly_powmod(Poly{Scalar::zero(f), Scalar::one(f)}, f.p, g, f);
    Poly lin = poly_gcd(g, poly_sub(xp, Poly{Scalar::zero(f), Scalar::one(f)}, f));
    if (lin.size() < 2) return std::nullopt;
    return split_linear_root(lin, f);
  }
  // Rational root theorem on the integer-scaled polynomial.
  mpz_class den = 1;
  for (const auto& c : g) den = lcm(den, c.rational().get_den());
  std::vector<mpz_class> ints;
  for (const auto& c : g) ints.push_back(mpz_class(c.rational() * den));
  for (const auto& u : divisors(ints.front()))
    for (const auto& w : divisors(ints.back()))
      for (int sign : {1, -1}) {
        Scalar cand = Scalar::from_rational(f, mpq_class(sign * u, w));
        if (poly_eval(g, cand, f).is_zero()) return cand;
      }
  return std::nullopt;
}

// A proper monic factor of f when one is cheaply visible.
std::optional<Poly> proper_factor(const Poly& f0, Field f) {
  Poly g = poly_monic(f0);
  if (g.size() <= 2) return std::nullopt;
  if (auto r = find_root(g, f)) return Poly{-*r, Scalar::one(f)};
  Poly d = poly_gcd(g, poly_derivative(g, f));
  if (d.size() > 1 && d.size() < g.size()) return d;
  if (f.is_finite()) {
    // Distinct-degree pieces.
    Poly x{Scalar::zero(f), Scalar::one(f)};
    Poly xq = x;
    for (std::size_t k = 1; 2 * k <= g.size() - 1; ++k) {
      xq = poly_powmod(xq, f.p, g, f);
      Poly h = poly_gcd(g, poly_sub(xq, x, f));
      if (h.size() > 1 && h.size() < g.size()) return h;
    }
  }
  return std::nullopt;
}

// ---- integer matrices mod m, for the lifted trace functionals ----
using IMat = std::vector<std::uint64_t>;

IMat imul(const IMat& a, const IMat& b, std::size_t n, std::uint64_t m) {
  IMat c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t x = a[i * n + k];
      if (!x) continue;
      for (std::size_t j = 0; j < n; ++j)
        c[i * n + j] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * b[k * n + j] + c[i * n + j]) % m);
    }
  return c;
}

std::uint64_t lifted_trace_power(const Matrix& x, std::uint64_t e, std::uint64_t m) {
  const std::size_t n = x.rows();
  IMat base(n * n), r(n * n, 0);
  auto res = x.residues();
  for (std::size_t i = 0; i < n * n; ++i) base[i] = res[i] % m;
  for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1 % m;
  while (e) {
    if (e & 1) r = imul(r, base, n, m);
    e >>= 1;
    if (e) base = imul(base, base, n, m);
  }
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < n; ++i) t = (t + r[i * n + i]) % m;
  return t;
}

Scalar trace(const Matrix& x) {
  Scalar t = Scalar::zero(x.field());
  for (std::size_t i = 0; i < x.rows(); ++i) t += x.at(i, i);
  return t;
}

void check_radical(const MatrixAlgebra& e, const Matrix& J) {
  const Field f = e.field;
  std::vector<Matrix> jm;
  for (std::size_t c = 0; c < J.cols(); ++c) jm.push_back(e.element(J.column_at(c)));
  for (const auto& x : jm)
    for (const auto& b : e.basis)
      for (const Matrix& y : {Matrix(x * b), Matrix(b * x)})
        if (!linalg::column_space_contains(J, e.coords(y))) throw std::logic_error("radical computation: not an ideal");
  std::vector<Matrix> layer = jm;
  for (std::size_t step = 0; !layer.empty(); ++step) {
    if (step > e.n + 1) throw std::logic_error("radical computation: ideal is not nilpotent");
    std::vector<Matrix> next;
    Matrix span(f, e.n * e.n, 0);
    for (const auto& x : layer)
      for (const auto& y : jm) {
        Matrix z = x * y;
        Matrix v = z.vectorize();
        if (z.is_zero() || linalg::column_space_contains(span, v)) continue;
        span = Matrix::hstack(span, v);
        next.push_back(z);
      }
    layer = std::move(next);
  }
}

}  // namespace

MatrixAlgebra MatrixAlgebra::of(Field f, std::size_t n, std::vector<Matrix> basis) {
  MatrixAlgebra e{f, n, std::move(basis), Matrix(f, n * n, 0)};
  std::vector<Matrix> cols;
  for (const auto& b : e.basis) cols.push_back(b.vectorize());
  e.columns = Matrix::hstack(cols, f, n * n);
  return e;
}

MatrixAlgebra MatrixAlgebra::endomorphisms(const Module& m) {
  std::vector<Matrix> basis;
  for (const auto& h : hom_basis(m, m)) basis.push_back(h.total());
  return of(m.field(), m.total_dim(), std::move(basis));
}

Matrix MatrixAlgebra::coords(const Matrix& x) const {
  auto c = linalg::solve(columns, x.vectorize());
  if (!c) throw std::logic_error("element outside the matrix algebra");
  return *c;
}

Matrix MatrixAlgebra::element(const Matrix& c) const {
  Matrix x(field, n, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!c.entry_is_zero(i, 0)) x.add_block(0, 0, basis[i], c.at(i, 0));
  return x;
}

Matrix jacobson_radical(const MatrixAlgebra& e) {
  const Field f = e.field;
  const std::size_t d = e.dim();
  Matrix J;
  if (d == 0) return Matrix(f, 0, 0);
  if (f.is_rational()) {
    Matrix g(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) g.set(i, j, trace(e.basis[i] * e.basis[j]));
    J = linalg::kernel_basis(g);
  } else {
    const std::uint64_t p = f.p;
    std::size_t l = 0;
    for (std::uint64_t pw = p; pw <= e.n; pw *= p) ++l;
    J = Matrix::identity(f, d);
    std::uint64_t pi = 1;  // p^i
    for (std::size_t i = 0; i <= l && J.cols() > 0; ++i, pi *= p) {
      const std::uint64_t mod = pi * p;
      Matrix g(f, d, J.cols());
      for (std::size_t k = 0; k < J.cols(); ++k) {
        Matrix a = e.element(J.column_at(k));
        for (std::size_t j = 0; j < d; ++j) {
          std::uint64_t t = lifted_trace_power(a * e.basis[j], pi, mod);
          if (t % pi != 0) throw std::logic_error("radical computation: lifted trace not divisible by p^i");
          g.set(j, k, static_cast<long long>((t / pi) % p));
        }
      }
      J = J * linalg::kernel_basis(g);
    }
  }
  check_radical(e, J);
  return J;
}

namespace {

// E/J with structure constants, elements as coefficient columns.
struct Semisimple {
  Field f;
  std::size_t dim = 0;
  std::vector<Matrix> left;  // left[i] = matrix of left multiplication by e_i
  Matrix one;
  Matrix projection, section;  // E -> E/J and a section

  Matrix mult(const Matrix& x, const Matrix& y) const {
    Matrix r(f, dim, 1);
    for (std::size_t i = 0; i < dim; ++i)
      if (!x.entry_is_zero(i, 0)) r = r + (left[i] * y).scaled(x.at(i, 0));
    return r;
  }
  Matrix left_mult(const Matrix& x) const {
    Matrix l(f, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      if (!x.entry_is_zero(i, 0)) l.add_block(0, 0, left[i], x.at(i, 0));
    return l;
  }
  bool is_unit(const Matrix& x) const { return linalg::rank(left_mult(x)) == dim; }
  Matrix unit_vec(std::size_t i) const {
    Matrix v(f, dim, 1);
    v.set(i, 0, 1);
    return v;
  }
  Poly min_poly(const Matrix& x) const {
    Matrix krylov = one;
    Matrix pw = one;
    for (std::size_t m = 1; m <= dim + 1; ++m) {
      pw = mult(x, pw);
      auto c = linalg::solve(krylov, pw);
      if (c) {
        Poly p;
        for (std::size_t k = 0; k < m; ++k) p.push_back(-c->at(k, 0));
        p.push_back(Scalar::one(f));
        return p;
      }
      krylov = Matrix::hstack(krylov, pw);
    }
    throw std::logic_error("minimal polynomial search failed");
  }
  Matrix eval(const Poly& p, const Matrix& x) const {
    Matrix r(f, dim, 1);
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = mult(x, r) + one.scaled(*it);
    return r;
  }
  bool commutative() const {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j)
        if (!(mult(unit_vec(i), unit_vec(j)) == mult(unit_vec(j), unit_vec(i)))) return false;
    return true;
  }
  Matrix power(Matrix x, std::uint64_t e) const {
    Matrix r = one;
    while (e) {
      if (e & 1) r = mult(r, x);
      x = mult(x, x);
      e >>= 1;
    }
    return r;
  }
  // Columns: basis of a subalgebra S (given), returns Frobenius-fixed subspace inside S.
  Matrix frobenius_fixed(const Matrix& sub) const {
    Matrix img(f, dim, sub.cols());
    for (std::size_t c = 0; c < sub.cols(); ++c) img.set_block(0, c, power(sub.column_at(c), f.p) - sub.column_at(c));
    // x = sub * a with (F - 1) x = 0; F is F_p-linear on a commutative algebra of characteristic p.
    return sub * linalg::kernel_basis(img);
  }
  Matrix center() const {
    // x with e_i x = x e_i for all i.
    Matrix sys(f, dim * dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        Matrix c = mult(unit_vec(i), unit_vec(j)) - mult(unit_vec(j), unit_vec(i));
        sys.set_block(i * dim, j, c);
      }
    return linalg::kernel_basis(sys);
  }
};

Semisimple quotient_algebra(const MatrixAlgebra& e, const Matrix& J) {
  const Field f = e.field;
  Semisimple s;
  s.f = f;
  linalg::Quotient q = linalg::quotient_by(J, e.dim());
  s.projection = q.projection;
  s.section = q.section;
  s.dim = q.projection.rows();
  std::vector<Matrix> lifts;
  for (std::size_t i = 0; i < s.dim; ++i) lifts.push_back(e.element(q.section.column_at(i)));
  s.left.assign(s.dim, Matrix(f, s.dim, s.dim));
  for (std::size_t i = 0; i < s.dim; ++i)
    for (std::size_t j = 0; j < s.dim; ++j) s.left[i].set_block(0, j, q.projection * e.coords(lifts[i] * lifts[j]));
  s.one = q.projection * e.coords(Matrix::identity(f, e.n));
  return s;
}

std::optional<Matrix> zero_divisor_from(const Semisimple& s, const Matrix& x) {
  if (x.is_zero()) return std::nullopt;
  if (!s.is_unit(x)) return x;
  Poly mp = s.min_poly(x);
  if (mp.size() <= 2) return std::nullopt;  // scalar
  auto g = proper_factor(mp, s.f);
  if (!g) return std::nullopt;
  Matrix z = s.eval(*g, x);
  if (z.is_zero() || s.is_unit(z)) return std::nullopt;
  return z;
}

// Right identity of the left ideal E z: an idempotent generating it.
Matrix idempotent_from(const Semisimple& s, const Matrix& z) {
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < s.dim; ++i) gens.push_back(s.mult(s.unit_vec(i), z));
  Matrix L = linalg::image_basis(Matrix::hstack(gens, s.f, s.dim));
  const std::size_t r = L.cols();
  // sum_k mu_k (l_j l_k) = l_j for all j.
  Matrix sys(s.f, r * s.dim, r), rhs(s.f, r * s.dim, 1);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < r; ++k) sys.set_block(j * s.dim, k, s.mult(L.column_at(j), L.column_at(k)));
    rhs.set_block(j * s.dim, 0, L.column_at(j));
  }
  auto mu = linalg::solve(sys, rhs);
  if (!mu) throw std::logic_error("left ideal without right identity: quotient not semisimple");
  Matrix e = L * *mu;
  if (!(s.mult(e, e) == e) || e.is_zero() || e == s.one) throw std::logic_error("idempotent construction failed");
  return e;
}

}  // namespace

SplitResult split_or_local(const MatrixAlgebra& e, std::uint64_t seed) {
  const Field f = e.field;
  if (e.dim() == 0) return {true, std::nullopt};
  Matrix J = jacobson_radical(e);
  Semisimple s = quotient_algebra(e, J);
  if (s.dim == 1) return {true, std::nullopt};

  std::optional<Matrix> z;
  if (f.is_finite()) {
    // Wedderburn: a finite division ring is a field.
    Matrix Z = s.center();
    Matrix fixed = s.frobenius_fixed(Z);
    if (fixed.cols() >= 2) {
      for (std::size_t c = 0; c < fixed.cols() && !z; ++c) z = zero_divisor_from(s, fixed.column_at(c));
      if (!z) throw std::logic_error("split commutative part without zero divisor");
    } else if (Z.cols() == s.dim) {
      return {true, std::nullopt};
    }
  }
  if (!z) {
    for (std::size_t i = 0; i < s.dim && !z; ++i) z = zero_divisor_from(s, s.unit_vec(i));
    for (std::size_t i = 0; i < s.dim && !z; ++i)
      for (std::size_t j = i + 1; j < s.dim && !z; ++j) z = zero_divisor_from(s, s.unit_vec(i) + s.unit_vec(j));
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (int attempt = 0; attempt < 256 && !z; ++attempt) {
      Matrix x(f, s.dim, 1);
      for (std::size_t i = 0; i < s.dim; ++i) x.set(i, 0, static_cast<long long>(rng() % 7) - 3);
      z = zero_divisor_from(s, x);
    }
  }
  if (!z) {
    if (f.is_finite()) throw std::runtime_error("decomposition undecided: no zero divisor found in a non-commutative semisimple quotient");
    throw std::runtime_error("decomposition undecided over Q: End/J has dimension " + std::to_string(s.dim) +
                             " and no zero divisor was found (possible non-split division algebra)");
  }
  Matrix ebar = idempotent_from(s, *z);
  Matrix x = e.element(s.section * ebar);
  const Scalar three(f, 3), two(f, 2);
  for (int it = 0; it < 64; ++it) {
    Matrix x2 = x * x;
    if (x2 == x) return {false, x};
    x = x2.scaled(three) - (x2 * x).scaled(two);
  }
  throw std::logic_error("idempotent lifting did not converge");
}

}  // namespace trigor::algebra

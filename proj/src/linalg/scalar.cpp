#include "trigor/linalg/scalar.hpp"

#include <cctype>

namespace trigor::linalg {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p > (1u << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime <= 2^31, got " + std::to_string(p));
  return Field{p};
}

std::string Field::name() const { return p == 0 ? "Q" : "GF(" + std::to_string(p) + ")"; }

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw FieldMismatch("field mismatch: " + a.name() + " vs " + b.name());
}

std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("division by zero in " + Field{p}.name());
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce_integer(const mpz_class& z, std::uint32_t p) {
  mpz_class m = z % p;
  if (m < 0) m += p;
  return static_cast<std::uint32_t>(m.get_ui());
}

Scalar::Scalar(Field f, long long v) : field_(f) {
  if (f.is_finite()) {
    long long m = v % static_cast<long long>(f.p);
    if (m < 0) m += f.p;
    v_ = static_cast<std::uint32_t>(m);
  } else {
    v_ = mpq_class(static_cast<long>(v));
  }
}

Scalar Scalar::from_residue(Field f, std::uint32_t r) {
  Scalar s(f, 0);
  if (f.is_finite())
    s.v_ = r % f.p;
  else
    s.v_ = mpq_class(static_cast<unsigned long>(r));
  return s;
}

Scalar Scalar::from_rational(Field f, const mpq_class& q) {
  Scalar s(f, 0);
  if (f.is_finite()) {
    std::uint32_t num = reduce_integer(q.get_num(), f.p);
    std::uint32_t den = reduce_integer(q.get_den(), f.p);
    s.v_ = mod_mul(num, mod_inv(den, f.p), f.p);
  } else {
    mpq_class c = q;
    c.canonicalize();
    s.v_ = std::move(c);
  }
  return s;
}

Scalar Scalar::parse(Field f, std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty scalar literal");
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  auto valid = [](const std::string& s, bool allow_sign) {
    std::size_t i = (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!valid(num, true) || !valid(den, false))
    throw std::invalid_argument("malformed scalar literal '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return from_rational(f, mpq_class(n, d));
}

bool Scalar::is_zero() const {
  return field_.is_finite() ? residue() == 0 : sgn(rational()) == 0;
}

bool Scalar::is_one() const {
  return field_.is_finite() ? residue() == 1 % field_.p : rational() == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(field_, o.field_);
  if (field_.is_finite()) {
    std::uint64_t v = static_cast<std::uint64_t>(residue()) + o.residue();
    return from_residue(field_, static_cast<std::uint32_t>(v >= field_.p ? v - field_.p : v));
  }
  Scalar s(field_, 0);
  s.v_ = mpq_class(rational() + o.rational());
  return s;
}

Scalar Scalar::operator-() const {
  if (field_.is_finite()) return from_residue(field_, residue() == 0 ? 0 : field_.p - residue());
  Scalar s(field_, 0);
  s.v_ = mpq_class(-rational());
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(field_, o.field_);
  if (field_.is_finite()) return from_residue(field_, mod_mul(residue(), o.residue(), field_.p));
  Scalar s(field_, 0);
  s.v_ = mpq_class(rational() * o.rational());
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (field_.is_finite()) return from_residue(field_, mod_inv(residue(), field_.p));
  Scalar s(field_, 0);
  s.v_ = mpq_class(1 / rational());
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_finite() ? residue() == o.residue() : rational() == o.rational();
}

std::string Scalar::to_string() const {
  return field_.is_finite() ? std::to_string(residue()) : rational().get_str();
}

}  // namespace trigor::linalg

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace trigor::linalg {

// p == 0 stands for the rationals.
struct Field {
  std::uint32_t p = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p == 0; }
  bool is_finite() const { return p != 0; }
  std::string name() const;

  bool operator==(const Field&) const = default;
};

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void require_same_field(const Field& a, const Field& b);

std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p);
std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t reduce_integer(const mpz_class& z, std::uint32_t p);

class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  Scalar(Field f, long long v);

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }
  static Scalar from_residue(Field f, std::uint32_t r);
  static Scalar from_rational(Field f, const mpq_class& q);
  // Accepts "3", "-2/7"; over F_p the denominator must be invertible.
  static Scalar parse(Field f, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  std::uint32_t residue() const { return std::get<std::uint32_t>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;

  std::string to_string() const;

 private:
  Field field_{};
  std::variant<std::uint32_t, mpq_class> v_;
};

}  // namespace trigor::linalg

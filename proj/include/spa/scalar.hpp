#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace spa {

class Coefficient;

/// The base field K: either the rationals or a prime field GF(p).
class Field {
 public:
  /// Rationals by default.
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws spa::Error unless 2 <= p < 2^31 and p is prime.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return modulus_ == 0; }
  /// 0 for the rationals.
  std::uint32_t modulus() const { return modulus_; }

  Coefficient zero() const;
  Coefficient one() const;
  Coefficient from_integer(long value) const;
  Coefficient from_integer(const mpz_class& value) const;
  Coefficient from_rational(const mpq_class& value) const;
  /// Parses an integer or `a/b` literal, optionally signed.
  Coefficient parse(std::string_view text) const;

  /// `QQ` or `GF(p)`.
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Coefficient;
  explicit Field(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

/// An exact element of a Field. Rationals are kept in lowest terms with a
/// positive denominator; residues lie in [0, p).
class Coefficient {
 public:
  /// Rational zero.
  Coefficient() = default;

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Throws DivisionByZero on zero.
  Coefficient inverse() const;

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& rhs);
  Coefficient& operator-=(const Coefficient& rhs);
  Coefficient& operator*=(const Coefficient& rhs);
  Coefficient& operator/=(const Coefficient& rhs);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }

  /// Mixed fields compare unequal rather than throwing.
  friend bool operator==(const Coefficient& a, const Coefficient& b);

  /// Rationals as `a` or `a/b`; residues as their representative in [0, p).
  std::string to_string() const;

  /// Only meaningful over the rationals.
  const mpq_class& rational() const { return q_; }
  /// Only meaningful over a prime field.
  std::uint32_t residue() const { return r_; }

 private:
  friend class Field;

  void check_same_field(const Coefficient& rhs) const;

  mpq_class q_;
  std::uint32_t r_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Coefficient& c);

}  // namespace spa

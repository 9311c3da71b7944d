#include "spa/scalar.hpp"

#include <ostream>

#include "spa/error.hpp"

namespace spa {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on signed 64-bit values
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw Error("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  return Field(static_cast<std::uint32_t>(p));
}

Coefficient Field::zero() const {
  Coefficient c;
  c.p_ = modulus_;
  return c;
}

Coefficient Field::one() const { return from_integer(1); }

Coefficient Field::from_integer(long value) const { return from_integer(mpz_class(value)); }

Coefficient Field::from_integer(const mpz_class& value) const {
  Coefficient c;
  c.p_ = modulus_;
  if (is_rational()) {
    c.q_ = value;
  } else {
    mpz_class r = value % modulus_;
    if (r < 0) r += modulus_;
    c.r_ = static_cast<std::uint32_t>(r.get_ui());
  }
  return c;
}

Coefficient Field::from_rational(const mpq_class& value) const {
  if (value.get_den() == 0) throw DivisionByZero();
  if (is_rational()) {
    Coefficient c;
    // mpq_set assumes a positive denominator; the copy constructor does not.
    c.q_ = mpq_class(value);
    c.q_.canonicalize();
    return c;
  }
  return from_integer(value.get_num()) / from_integer(value.get_den());
}

Coefficient Field::parse(std::string_view text) const {
  std::string s(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.erase(s.begin());
  }
  auto slash = s.find('/');
  auto digits = [&](const std::string& part) {
    if (part.empty()) throw Error("malformed number '" + std::string(text) + "'");
    for (char ch : part)
      if (ch < '0' || ch > '9') throw Error("malformed number '" + std::string(text) + "'");
    return mpz_class(part, 10);
  };
  Coefficient c;
  if (slash == std::string::npos) {
    c = from_integer(digits(s));
  } else {
    mpz_class num = digits(s.substr(0, slash));
    mpz_class den = digits(s.substr(slash + 1));
    if (den == 0) throw DivisionByZero();
    c = from_integer(num) / from_integer(den);
  }
  return negative ? -c : c;
}

std::string Field::name() const {
  return is_rational() ? std::string("QQ") : "GF(" + std::to_string(modulus_) + ")";
}

Field Coefficient::field() const {
  return Field(p_);
}

bool Coefficient::is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }

bool Coefficient::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

void Coefficient::check_same_field(const Coefficient& rhs) const {
  if (p_ != rhs.p_) throw FieldMismatch();
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Coefficient c = *this;
  if (p_ == 0)
    c.q_ = 1 / q_;
  else
    c.r_ = mod_inverse(r_, p_);
  return c;
}

Coefficient Coefficient::operator-() const {
  Coefficient c = *this;
  if (p_ == 0)
    c.q_ = -q_;
  else if (r_ != 0)
    c.r_ = p_ - r_;
  return c;
}

Coefficient& Coefficient::operator+=(const Coefficient& rhs) {
  check_same_field(rhs);
  if (p_ == 0) {
    q_ += rhs.q_;
  } else {
    std::uint64_t s = std::uint64_t{r_} + rhs.r_;
    if (s >= p_) s -= p_;
    r_ = static_cast<std::uint32_t>(s);
  }
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& rhs) {
  check_same_field(rhs);
  if (p_ == 0) {
    q_ -= rhs.q_;
  } else {
    r_ = r_ >= rhs.r_ ? r_ - rhs.r_ : static_cast<std::uint32_t>(std::uint64_t{r_} + p_ - rhs.r_);
  }
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& rhs) {
  check_same_field(rhs);
  if (p_ == 0)
    q_ *= rhs.q_;
  else
    r_ = static_cast<std::uint32_t>(std::uint64_t{r_} * rhs.r_ % p_);
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Coefficient& a, const Coefficient& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Coefficient::to_string() const {
  return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Coefficient& c) { return os << c.to_string(); }

}  // namespace spa

#include "spa/monomial.hpp"

#include <algorithm>
#include <string>

#include "spa/error.hpp"

namespace spa {

namespace {

void check_arity(std::size_t a, std::size_t b) {
  if (a != b)
    throw ArityError("monomial lengths differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

Monomial Monomial::generator(std::size_t n, std::size_t i, Exponent power) {
  Monomial m(n);
  m.e_.at(i) = power;
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
}

Exponent Monomial::total() const {
  Exponent s = 0;
  for (Exponent x : e_) s += x;
  return s;
}

Monomial& Monomial::operator+=(const Monomial& rhs) {
  check_arity(size(), rhs.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += rhs.e_[i];
  return *this;
}

bool Monomial::divides(const Monomial& other) const {
  check_arity(size(), other.size());
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::cofactor_in(const Monomial& other) const {
  check_arity(size(), other.size());
  Monomial r = other;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_arity(size(), other.size());
  Monomial r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(e_[i], other.e_[i]);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent x : e_) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

MonomialOrder::MonomialOrder(Family family, std::vector<std::size_t> precedence,
                             std::vector<std::uint32_t> weights)
    : family_(family), precedence_(std::move(precedence)), weights_(std::move(weights)) {
  check_arity(precedence_.size(), weights_.size());
  std::vector<bool> seen(weights_.size(), false);
  for (std::size_t g : precedence_) {
    if (g >= seen.size() || seen[g]) throw Error("generator precedence is not a permutation");
    seen[g] = true;
  }
  for (std::uint32_t w : weights_)
    if (w == 0) throw Error("generator weights must be positive");
}

Degree MonomialOrder::degree(const Monomial& m) const {
  check_arity(m.size(), weights_.size());
  Degree d = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) d += Degree{weights_[i]} * m[i];
  return d;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  check_arity(a.size(), weights_.size());
  check_arity(b.size(), weights_.size());
  if (auto c = degree(a) <=> degree(b); c != 0) return c;
  if (family_ == Family::DegLex) {
    // largest generator decides; more of it wins
    for (auto it = precedence_.rbegin(); it != precedence_.rend(); ++it)
      if (a[*it] != b[*it]) return a[*it] <=> b[*it];
  } else {
    // smallest generator decides; more of it loses
    for (std::size_t g : precedence_)
      if (a[g] != b[g]) return b[g] <=> a[g];
  }
  return std::strong_ordering::equal;
}

}  // namespace spa

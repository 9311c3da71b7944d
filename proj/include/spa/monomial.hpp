#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace spa {

using Exponent = std::uint32_t;
/// Weighted degrees and module shifts.
using Degree = std::int64_t;

/// Exponent vector of a PBW monomial a_1^e_1 ... a_n^e_n.
class Monomial {
 public:
  using Storage = boost::container::small_vector<Exponent, 8>;

  Monomial() = default;
  /// The monomial 1 in n generators.
  explicit Monomial(std::size_t n) : e_(n, 0) {}
  Monomial(std::initializer_list<Exponent> exps) : e_(exps.begin(), exps.end()) {}
  explicit Monomial(const std::vector<Exponent>& exps) : e_(exps.begin(), exps.end()) {}

  /// x_i in n generators.
  static Monomial generator(std::size_t n, std::size_t i, Exponent power = 1);

  std::size_t size() const { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  Exponent& operator[](std::size_t i) { return e_[i]; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  bool is_one() const;
  /// Unweighted total degree.
  Exponent total() const;

  Monomial& operator+=(const Monomial& rhs);
  friend Monomial operator+(Monomial a, const Monomial& b) { return a += b; }

  /// Exponentwise <=. Throws ArityError on length mismatch.
  bool divides(const Monomial& other) const;
  /// other - *this; requires divides(other).
  Monomial cofactor_in(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

  std::size_t hash() const;

 private:
  Storage e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Weighted degree-compatible monomial orderings on PBW monomials.
class MonomialOrder {
 public:
  enum class Family { DegLex, DegRevLex };

  /// `precedence` lists generator indices from smallest to largest; `weights`
  /// are the positive generator degrees.
  MonomialOrder(Family family, std::vector<std::size_t> precedence,
                std::vector<std::uint32_t> weights);

  /// Throws ArityError when lengths differ from the generator count.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  Degree degree(const Monomial& m) const;

  Family family() const { return family_; }
  const std::vector<std::size_t>& precedence() const { return precedence_; }
  const std::vector<std::uint32_t>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }

 private:
  Family family_;
  std::vector<std::size_t> precedence_;
  std::vector<std::uint32_t> weights_;
};

}  // namespace spa

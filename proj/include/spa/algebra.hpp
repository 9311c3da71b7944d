#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "spa/monomial.hpp"
#include "spa/scalar.hpp"

namespace spa {

struct Term {
  Coefficient coef;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A sparse element of the algebra in its PBW basis. Terms are nonzero and
/// strictly descending under the algebra's ordering; no terms means zero.
class Polynomial {
 public:
  Polynomial() = default;

  /// Sorts descending, merges equal monomials and drops zero coefficients.
  static Polynomial canonical(std::vector<Term> terms, const MonomialOrder& order);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Throws ZeroPolynomial.
  const Term& lead() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  friend class SolvableAlgebra;
  explicit Polynomial(std::vector<Term> sorted) : terms_(std::move(sorted)) {}

  std::vector<Term> terms_;
};

/// Defining relation a_upper * a_lower = scalar * a_lower a_upper + tail, lower < upper.
struct RelationSpec {
  std::size_t upper = 0;
  std::size_t lower = 0;
  Coefficient scalar;
  std::vector<Term> tail;
};

struct Relation {
  Coefficient scalar;
  Polynomial tail;
};

struct ValidationReport {
  std::vector<std::string> failures;

  bool valid() const { return failures.empty(); }
};

/// A weighted solvable polynomial algebra K[a_1, ..., a_n] with a PBW basis.
///
/// Products of PBW monomials are normalized by rewriting the rightmost
/// generator of the left factor against the leftmost generator of the right
/// factor through the relation table. Products of generator powers
/// a_j^k a_i^l and of monomial pairs are memoized; the cache is internally
/// synchronized and results never depend on it. Instances are immutable
/// after construction and are shared through std::shared_ptr.
class SolvableAlgebra {
 public:
  /// Pairs without a RelationSpec commute (scalar 1, no tail). Throws
  /// spa::Error on structural problems: bad indices, duplicate relations,
  /// wrong arity, mismatched fields. Semantic checks live in check_solvable.
  SolvableAlgebra(Field field, std::vector<std::string> names, std::vector<std::uint32_t> weights,
                  MonomialOrder::Family family, std::vector<std::size_t> precedence,
                  std::vector<RelationSpec> relations);
  ~SolvableAlgebra();

  SolvableAlgebra(const SolvableAlgebra&) = delete;
  SolvableAlgebra& operator=(const SolvableAlgebra&) = delete;

  std::size_t num_gens() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::uint32_t>& weights() const { return order_.weights(); }
  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  /// Requires lower < upper.
  const Relation& relation(std::size_t upper, std::size_t lower) const;
  bool is_commutative() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b);
  }

  Polynomial zero() const { return {}; }
  Polynomial one() const { return constant(field_.one()); }
  Polynomial constant(const Coefficient& c) const;
  Polynomial variable(std::size_t i) const;
  Polynomial term(const Coefficient& c, const Monomial& m) const;
  Polynomial from_terms(std::vector<Term> terms) const { return Polynomial::canonical(std::move(terms), order_); }

  Polynomial add(const Polynomial& f, const Polynomial& g) const;
  Polynomial sub(const Polynomial& f, const Polynomial& g) const;
  Polynomial neg(const Polynomial& f) const;
  Polynomial scale(const Coefficient& c, const Polynomial& f) const;

  /// PBW normal form of a^alpha * a^beta. Throws NormalizationDiverged when
  /// rewriting nests beyond a cap growing with the total degree.
  Polynomial normalize_product(const Monomial& alpha, const Monomial& beta) const;
  Polynomial multiply(const Polynomial& f, const Polynomial& g) const;
  /// c * a^alpha * f.
  Polynomial multiply_term(const Coefficient& c, const Monomial& alpha, const Polynomial& f) const;
  Polynomial power(const Polynomial& f, unsigned exponent) const;

  /// (LC, LM). Throws ZeroPolynomial.
  std::pair<Coefficient, Monomial> leading(const Polynomial& f) const;

  Degree degree(const Monomial& m) const { return order_.degree(m); }
  /// Maximal weighted degree of a term. Throws ZeroPolynomial.
  Degree degree(const Polynomial& f) const;
  /// Zero counts as homogeneous.
  bool is_homogeneous(const Polynomial& f) const;

  /// Nonzero scalars, LM(tail) below a_i a_j, and the associativity diamond
  /// (a_k a_j) a_i == a_k (a_j a_i) for every triple i < j < k.
  ValidationReport check_solvable() const;
  /// Every tail monomial of a_j a_i has weighted degree d(a_i) + d(a_j).
  ValidationReport check_graded() const;

  /// `2*x^2*y + 1/3*y^3`; zero renders as `0`.
  std::string render(const Polynomial& f) const;
  std::string render(const Monomial& m) const;

 private:
  struct Cache;

  Polynomial mono_product(const Monomial& a, const Monomial& b, int depth, int cap) const;
  Polynomial power_product(std::size_t j, Exponent k, std::size_t i, Exponent l, int depth,
                           int cap) const;
  std::string relation_name(std::size_t upper, std::size_t lower) const;

  Field field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::vector<Relation> table_;  // upper * n + lower
  std::unique_ptr<Cache> cache_;
};

using AlgebraPtr = std::shared_ptr<const SolvableAlgebra>;

}  // namespace spa

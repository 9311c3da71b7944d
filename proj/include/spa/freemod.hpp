#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spa/algebra.hpp"

namespace spa {

/// a^mono e_index, index 0-based.
struct ModuleMonomial {
  Monomial mono;
  std::size_t index = 0;

  friend bool operator==(const ModuleMonomial&, const ModuleMonomial&) = default;
};

struct ModuleTerm {
  Coefficient coef;
  Monomial mono;
  std::size_t index = 0;

  ModuleMonomial monomial() const { return {mono, index}; }
  friend bool operator==(const ModuleTerm&, const ModuleTerm&) = default;
};

class ModuleOrder;
using ModuleOrderPtr = std::shared_ptr<const ModuleOrder>;

/// Left monomial orderings on a free module: term-over-position,
/// position-over-term, or the Schreyer ordering induced by a list of
/// leading monomials in another module.
class ModuleOrder {
 public:
  enum class Kind { TOP, POT, Schreyer };

  static ModuleOrderPtr top();
  static ModuleOrderPtr pot();
  /// a^u e_i < a^v e_j iff (u + LM_i) < (v + LM_j) in `base`, ties broken by i < j.
  static ModuleOrderPtr schreyer(ModuleOrderPtr base, std::vector<ModuleMonomial> leads);

  Kind kind() const { return kind_; }
  const ModuleOrderPtr& base() const { return base_; }
  const std::vector<ModuleMonomial>& leads() const { return leads_; }

  std::strong_ordering compare(const MonomialOrder& ring, const Monomial& a, std::size_t i,
                               const Monomial& b, std::size_t j) const;

 private:
  explicit ModuleOrder(Kind kind) : kind_(kind) {}

  Kind kind_;
  ModuleOrderPtr base_;
  std::vector<ModuleMonomial> leads_;
};

/// Sparse element of a free module, terms strictly descending under the
/// module ordering. Constructed only through FreeModule.
class ModuleElement {
 public:
  ModuleElement() = default;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<ModuleTerm>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  /// Throws ZeroElement.
  const ModuleTerm& lead() const;

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  friend class FreeModule;
  explicit ModuleElement(std::vector<ModuleTerm> sorted) : terms_(std::move(sorted)) {}

  std::vector<ModuleTerm> terms_;
};

struct DivisionResult {
  std::vector<Polynomial> quotients;
  ModuleElement remainder;
};

/// S = left_coef * a^left_mono * first - right_coef * a^right_mono * second.
struct SPolynomial {
  ModuleElement value;
  Coefficient left_coef;
  Monomial left_mono;
  Coefficient right_coef;
  Monomial right_mono;
  /// Weighted degree of the common leading monomial plus its shift.
  Degree degree = 0;
};

/// Graded free left module L = A e_1 + ... + A e_s with shifts d(e_i) = b_i.
class FreeModule {
 public:
  FreeModule(AlgebraPtr algebra, std::vector<Degree> shifts,
             ModuleOrderPtr order = ModuleOrder::top());

  const SolvableAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  std::size_t rank() const { return shifts_.size(); }
  const std::vector<Degree>& shifts() const { return shifts_; }
  Degree shift(std::size_t i) const { return shifts_.at(i); }
  const ModuleOrderPtr& order() const { return order_; }

  /// Free module with one basis vector per element of `gens`, shifted by its
  /// degree and ordered by the Schreyer ordering those elements induce here.
  /// Throws ZeroElement if any element is zero.
  FreeModule induced(std::span<const ModuleElement> gens) const;

  std::strong_ordering compare(const ModuleMonomial& u, const ModuleMonomial& v) const;
  /// Same component and exponentwise <=.
  static bool divides(const ModuleMonomial& u, const ModuleMonomial& v);

  ModuleElement zero() const { return {}; }
  /// e_i.
  ModuleElement basis(std::size_t i) const;
  ModuleElement from_terms(std::vector<ModuleTerm> terms) const;
  /// Throws ShapeError unless components.size() == rank().
  ModuleElement from_components(const std::vector<Polynomial>& components) const;
  /// f e_i.
  ModuleElement embed(const Polynomial& f, std::size_t i) const;
  Polynomial component(const ModuleElement& x, std::size_t i) const;
  std::vector<Polynomial> components(const ModuleElement& x) const;

  ModuleElement add(const ModuleElement& x, const ModuleElement& y) const;
  ModuleElement sub(const ModuleElement& x, const ModuleElement& y) const;
  ModuleElement neg(const ModuleElement& x) const;
  ModuleElement scale(const Coefficient& c, const ModuleElement& x) const;
  /// Left multiplication f * x.
  ModuleElement multiply(const Polynomial& f, const ModuleElement& x) const;
  /// c * a^alpha * x.
  ModuleElement multiply_term(const Coefficient& c, const Monomial& alpha,
                              const ModuleElement& x) const;
  /// sum over terms c a^u w_k of `row` of c a^u gens[k]; the result lives in
  /// this module. Throws ShapeError when a row index has no generator.
  ModuleElement combine(const ModuleElement& row, std::span<const ModuleElement> gens) const;

  /// Throws ZeroElement.
  const ModuleTerm& lead(const ModuleElement& x) const { return x.lead(); }
  /// Maximal d(a^u) + b_i over the terms. Throws ZeroElement.
  Degree degree(const ModuleElement& x) const;
  Degree degree(const ModuleMonomial& u) const;
  /// Zero counts as homogeneous.
  bool is_homogeneous(const ModuleElement& x) const;

  /// Left division with total reduction; the first divisor whose leading
  /// monomial divides wins. Throws ModuleMismatch for foreign elements.
  DivisionResult divide(const ModuleElement& x, std::span<const ModuleElement> divisors) const;
  ModuleElement reduce(const ModuleElement& x, std::span<const ModuleElement> divisors) const {
    return divide(x, divisors).remainder;
  }

  /// Left S-polynomial; zero when the leading components differ.
  /// Throws ZeroElement on zero input.
  ModuleElement s_polynomial(const ModuleElement& x, const ModuleElement& y) const;
  /// The S-polynomial with its cofactors, or nullopt when the leading
  /// components differ.
  std::optional<SPolynomial> s_polynomial_parts(const ModuleElement& x,
                                                const ModuleElement& y) const;

  /// Throws ModuleMismatch when an index or arity does not fit this module.
  void check(const ModuleElement& x) const;

  /// `[x^2 + y^2, 0, x*y]`.
  std::string render(const ModuleElement& x) const;

 private:
  ModuleElement canonical(std::vector<ModuleTerm> terms) const;
  bool greater(const ModuleTerm& a, const ModuleTerm& b) const;

  AlgebraPtr algebra_;
  std::vector<Degree> shifts_;
  ModuleOrderPtr order_;
};

}  // namespace spa

#include "spa/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "spa/error.hpp"

namespace spa {

namespace {

struct PowerKey {
  std::size_t j, i;
  Exponent k, l;
  friend bool operator==(const PowerKey&, const PowerKey&) = default;
};

struct PowerKeyHash {
  std::size_t operator()(const PowerKey& key) const {
    std::size_t h = key.j * 0x9e3779b1u;
    h ^= key.i + 0x7f4a7c15u + (h << 6) + (h >> 2);
    h ^= key.k + 0x85ebca6bu + (h << 6) + (h >> 2);
    h ^= key.l + 0xc2b2ae35u + (h << 6) + (h >> 2);
    return h;
  }
};

struct PairHash {
  std::size_t operator()(const std::pair<Monomial, Monomial>& p) const {
    std::size_t h = p.first.hash();
    return h ^ (p.second.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
  }
};

constexpr std::size_t kProductCacheLimit = std::size_t{1} << 20;

void append_scaled(std::vector<Term>& out, const Coefficient& c, const Polynomial& p) {
  for (const Term& t : p) out.push_back(Term{c * t.coef, t.mono});
}

}  // namespace

struct SolvableAlgebra::Cache {
  std::shared_mutex mutex;
  std::unordered_map<PowerKey, Polynomial, PowerKeyHash> powers;
  std::unordered_map<std::pair<Monomial, Monomial>, Polynomial, PairHash> products;
};

Polynomial Polynomial::canonical(std::vector<Term> terms, const MonomialOrder& order) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  return Polynomial(std::move(out));
}

const Term& Polynomial::lead() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return terms_.front();
}

SolvableAlgebra::SolvableAlgebra(Field field, std::vector<std::string> names,
                                 std::vector<std::uint32_t> weights, MonomialOrder::Family family,
                                 std::vector<std::size_t> precedence,
                                 std::vector<RelationSpec> relations)
    : field_(field),
      names_(std::move(names)),
      order_(family, std::move(precedence), std::move(weights)),
      cache_(std::make_unique<Cache>()) {
  const std::size_t n = names_.size();
  if (order_.size() != n) throw ArityError("weights and generator names differ in length");
  table_.assign(n * n, Relation{field_.one(), Polynomial()});
  std::vector<bool> seen(n * n, false);
  for (RelationSpec& spec : relations) {
    if (spec.upper >= n || spec.lower >= spec.upper)
      throw Error("relation indices must satisfy lower < upper < n");
    const std::size_t slot = spec.upper * n + spec.lower;
    if (seen[slot]) throw Error("duplicate relation for " + relation_name(spec.upper, spec.lower));
    seen[slot] = true;
    if (spec.scalar.field() != field_) throw FieldMismatch();
    for (const Term& t : spec.tail) {
      if (t.mono.size() != n) throw ArityError("relation tail monomial has wrong arity");
      if (t.coef.field() != field_) throw FieldMismatch();
    }
    table_[slot] = Relation{spec.scalar, Polynomial::canonical(std::move(spec.tail), order_)};
  }
}

SolvableAlgebra::~SolvableAlgebra() = default;

const Relation& SolvableAlgebra::relation(std::size_t upper, std::size_t lower) const {
  if (upper >= num_gens() || lower >= upper) throw Error("relation indices out of range");
  return table_[upper * num_gens() + lower];
}

bool SolvableAlgebra::is_commutative() const {
  for (std::size_t j = 0; j < num_gens(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const Relation& r = relation(j, i);
      if (!r.scalar.is_one() || !r.tail.is_zero()) return false;
    }
  return true;
}

Polynomial SolvableAlgebra::constant(const Coefficient& c) const {
  return term(c, Monomial(num_gens()));
}

Polynomial SolvableAlgebra::variable(std::size_t i) const {
  return term(field_.one(), Monomial::generator(num_gens(), i));
}

Polynomial SolvableAlgebra::term(const Coefficient& c, const Monomial& m) const {
  if (m.size() != num_gens()) throw ArityError("monomial has wrong arity");
  if (c.is_zero()) return {};
  return Polynomial({Term{c, m}});
}

Polynomial SolvableAlgebra::add(const Polynomial& f, const Polynomial& g) const {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  auto a = f.begin(), b = g.begin();
  while (a != f.end() && b != g.end()) {
    auto c = order_.compare(a->mono, b->mono);
    if (c > 0) {
      out.push_back(*a++);
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      Coefficient s = a->coef + b->coef;
      if (!s.is_zero()) out.push_back(Term{std::move(s), a->mono});
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, f.end());
  out.insert(out.end(), b, g.end());
  return Polynomial(std::move(out));
}

Polynomial SolvableAlgebra::neg(const Polynomial& f) const {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f) out.push_back(Term{-t.coef, t.mono});
  return Polynomial(std::move(out));
}

Polynomial SolvableAlgebra::sub(const Polynomial& f, const Polynomial& g) const {
  return add(f, neg(g));
}

Polynomial SolvableAlgebra::scale(const Coefficient& c, const Polynomial& f) const {
  if (c.is_zero()) return {};
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f) out.push_back(Term{c * t.coef, t.mono});
  return Polynomial(std::move(out));
}

Polynomial SolvableAlgebra::normalize_product(const Monomial& alpha, const Monomial& beta) const {
  if (alpha.size() != num_gens() || beta.size() != num_gens())
    throw ArityError("monomial has wrong arity");
  const int total = static_cast<int>(alpha.total() + beta.total());
  const int cap = 1000 + 50 * total;
  return mono_product(alpha, beta, 0, cap);
}

Polynomial SolvableAlgebra::mono_product(const Monomial& a, const Monomial& b, int depth,
                                         int cap) const {
  if (depth > cap)
    throw NormalizationDiverged("product normalization exceeded its rewriting cap; the "
                                "relations do not define a solvable algebra");
  const std::size_t n = num_gens();
  std::size_t last = n, first = n;
  for (std::size_t g = n; g-- > 0;)
    if (a[g] != 0) {
      last = g;
      break;
    }
  for (std::size_t g = 0; g < n; ++g)
    if (b[g] != 0) {
      first = g;
      break;
    }
  if (last == n || first == n || last <= first) return Polynomial({Term{field_.one(), a + b}});

  auto key = std::make_pair(a, b);
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->products.find(key);
    if (it != cache_->products.end()) return it->second;
  }

  Monomial rest_a = a, rest_b = b;
  rest_a[last] = 0;
  rest_b[first] = 0;
  const Polynomial swapped = power_product(last, a[last], first, b[first], depth + 1, cap);

  std::vector<Term> acc;
  for (const Term& t : swapped) {
    const Polynomial left =
        rest_a.is_one() ? Polynomial({Term{field_.one(), t.mono}})
                        : mono_product(rest_a, t.mono, depth + 1, cap);
    for (const Term& u : left) {
      const Coefficient c = t.coef * u.coef;
      if (rest_b.is_one())
        acc.push_back(Term{c, u.mono});
      else
        append_scaled(acc, c, mono_product(u.mono, rest_b, depth + 1, cap));
    }
  }
  Polynomial result = from_terms(std::move(acc));

  std::unique_lock lock(cache_->mutex);
  if (cache_->products.size() >= kProductCacheLimit) cache_->products.clear();
  cache_->products.emplace(std::move(key), result);
  return result;
}

Polynomial SolvableAlgebra::power_product(std::size_t j, Exponent k, std::size_t i, Exponent l,
                                          int depth, int cap) const {
  const PowerKey key{j, i, k, l};
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->powers.find(key);
    if (it != cache_->powers.end()) return it->second;
  }
  const std::size_t n = num_gens();
  Polynomial result;
  if (k == 1 && l == 1) {
    const Relation& r = relation(j, i);
    Monomial m(n);
    m[i] = 1;
    m[j] = 1;
    result = add(term(r.scalar, m), r.tail);
  } else if (k == 1) {
    // a_j a_i^l = (a_j a_i^(l-1)) a_i
    const Polynomial prev = power_product(j, 1, i, l - 1, depth + 1, cap);
    const Monomial xi = Monomial::generator(n, i);
    std::vector<Term> acc;
    for (const Term& t : prev) append_scaled(acc, t.coef, mono_product(t.mono, xi, depth + 1, cap));
    result = from_terms(std::move(acc));
  } else {
    // a_j^k a_i^l = a_j (a_j^(k-1) a_i^l)
    const Polynomial prev = power_product(j, k - 1, i, l, depth + 1, cap);
    const Monomial xj = Monomial::generator(n, j);
    std::vector<Term> acc;
    for (const Term& t : prev) append_scaled(acc, t.coef, mono_product(xj, t.mono, depth + 1, cap));
    result = from_terms(std::move(acc));
  }
  std::unique_lock lock(cache_->mutex);
  cache_->powers.emplace(key, result);
  return result;
}

Polynomial SolvableAlgebra::multiply(const Polynomial& f, const Polynomial& g) const {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Term> acc;
  for (const Term& s : f)
    for (const Term& t : g) append_scaled(acc, s.coef * t.coef, normalize_product(s.mono, t.mono));
  return from_terms(std::move(acc));
}

Polynomial SolvableAlgebra::multiply_term(const Coefficient& c, const Monomial& alpha,
                                          const Polynomial& f) const {
  if (c.is_zero() || f.is_zero()) return {};
  std::vector<Term> acc;
  for (const Term& t : f) append_scaled(acc, c * t.coef, normalize_product(alpha, t.mono));
  return from_terms(std::move(acc));
}

Polynomial SolvableAlgebra::power(const Polynomial& f, unsigned exponent) const {
  Polynomial r = one();
  for (unsigned e = 0; e < exponent; ++e) r = multiply(r, f);
  return r;
}

std::pair<Coefficient, Monomial> SolvableAlgebra::leading(const Polynomial& f) const {
  const Term& t = f.lead();
  return {t.coef, t.mono};
}

Degree SolvableAlgebra::degree(const Polynomial& f) const {
  if (f.is_zero()) throw ZeroPolynomial();
  Degree d = 0;
  for (const Term& t : f) d = std::max(d, degree(t.mono));
  return d;
}

bool SolvableAlgebra::is_homogeneous(const Polynomial& f) const {
  if (f.is_zero()) return true;
  const Degree d = degree(f.lead().mono);
  return std::all_of(f.begin(), f.end(), [&](const Term& t) { return degree(t.mono) == d; });
}

std::string SolvableAlgebra::relation_name(std::size_t upper, std::size_t lower) const {
  return names_.at(upper) + "*" + names_.at(lower);
}

ValidationReport SolvableAlgebra::check_solvable() const {
  ValidationReport report;
  const std::size_t n = num_gens();
  bool structural_ok = true;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const Relation& r = relation(j, i);
      if (r.scalar.is_zero()) {
        report.failures.push_back("relation " + relation_name(j, i) +
                                  ": lambda must be nonzero");
        structural_ok = false;
      }
      if (!r.tail.is_zero()) {
        Monomial ij(n);
        ij[i] = 1;
        ij[j] = 1;
        if (compare(r.tail.lead().mono, ij) >= 0) {
          report.failures.push_back("relation " + relation_name(j, i) + ": leading tail monomial " +
                                    render(r.tail.lead().mono) + " is not below " + render(ij));
          structural_ok = false;
        }
      }
    }
  if (!structural_ok) return report;

  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        const Polynomial xi = variable(i), xj = variable(j), xk = variable(k);
        try {
          const Polynomial left = multiply(multiply(xk, xj), xi);
          const Polynomial right = multiply(xk, multiply(xj, xi));
          if (left != right)
            report.failures.push_back("associativity fails on " + names_[k] + "*" + names_[j] +
                                      "*" + names_[i] + ": " + render(left) +
                                      " != " + render(right));
        } catch (const NormalizationDiverged& e) {
          report.failures.push_back("associativity check on " + names_[k] + "*" + names_[j] +
                                    "*" + names_[i] + " diverged");
        }
      }
  return report;
}

ValidationReport SolvableAlgebra::check_graded() const {
  ValidationReport report;
  const std::size_t n = num_gens();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const Degree want = Degree{weights()[i]} + weights()[j];
      for (const Term& t : relation(j, i).tail) {
        if (degree(t.mono) != want) {
          report.failures.push_back("relation " + relation_name(j, i) + ": tail monomial " +
                                    render(t.mono) + " has degree " +
                                    std::to_string(degree(t.mono)) + ", expected " +
                                    std::to_string(want));
        }
      }
    }
  return report;
}

std::string SolvableAlgebra::render(const Monomial& m) const {
  std::string out;
  for (std::size_t g = 0; g < m.size(); ++g) {
    if (m[g] == 0) continue;
    if (!out.empty()) out += '*';
    out += names_.at(g);
    if (m[g] > 1) out += "^" + std::to_string(m[g]);
  }
  return out.empty() ? "1" : out;
}

std::string SolvableAlgebra::render(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : f) {
    Coefficient c = t.coef;
    bool negative = field_.is_rational() && sgn(c.rational()) < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (t.mono.is_one()) {
      os << c.to_string();
    } else {
      if (!c.is_one()) os << c.to_string() << '*';
      os << render(t.mono);
    }
  }
  return os.str();
}

}  // namespace spa

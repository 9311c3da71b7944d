// Algebras, element builders and random generators shared by the tests.
#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "spa/error.hpp"
#include "spa/freemod.hpp"
#include "spa/presentation.hpp"
#include "spa/problem.hpp"

namespace fx {

using namespace spa;

/// a/b; goes through mpz_class because mpq_class(0, b) picks the string constructor.
inline mpq_class rat(long a, long b) { return mpq_class(mpz_class(a), mpz_class(b)); }

inline Coefficient Q(long a, long b = 1) { return Field().from_rational(rat(a, b)); }

inline std::vector<std::string> default_names(std::size_t n) {
  static const char* names[] = {"x", "y", "z", "w", "u", "v"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(names[i]);
  return out;
}

inline std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

inline AlgebraPtr make(std::vector<RelationSpec> rels, std::size_t n,
                       MonomialOrder::Family fam = MonomialOrder::Family::DegLex,
                       std::vector<std::size_t> precedence = {}, std::vector<std::uint32_t> weights = {},
                       Field field = Field(), std::vector<std::string> names = {}) {
  if (precedence.empty()) precedence = identity(n);
  if (weights.empty()) weights.assign(n, 1);
  if (names.empty()) names = default_names(n);
  return std::make_shared<SolvableAlgebra>(field, names, weights, fam, precedence, std::move(rels));
}

inline AlgebraPtr commutative(std::size_t n, MonomialOrder::Family fam = MonomialOrder::Family::DegLex,
                              std::vector<std::size_t> precedence = {}, Field field = Field()) {
  return make({}, n, fam, std::move(precedence), {}, field);
}

/// y*x = q*x*y
inline AlgebraPtr quantum_plane(const Coefficient& q) {
  return make({RelationSpec{1, 0, q, {}}}, 2);
}

/// x_j x_i = l_ji x_i x_j on three generators.
inline AlgebraPtr quantum3(const Coefficient& l21, const Coefficient& l31, const Coefficient& l32) {
  return make({RelationSpec{1, 0, l21, {}}, RelationSpec{2, 0, l31, {}}, RelationSpec{2, 1, l32, {}}}, 3);
}

/// Quantum 2x2 matrices on a < b < c < d, the associative relation set.
inline AlgebraPtr mq2(long q) {
  const Field K;
  const Coefficient qq = Q(q), qi = Q(1, q);
  const Coefficient gap = qq - qi;
  auto mono = [](std::initializer_list<Exponent> e) { return Monomial(std::vector<Exponent>(e)); };
  std::vector<RelationSpec> rels = {
      {1, 0, qq, {}},
      {2, 0, K.one(), {}},
      {2, 1, qi, {}},
      {3, 0, qi, {}},
      {3, 1, K.one(), {Term{-gap, mono({1, 0, 1, 0})}}},
      {3, 2, qi, {}},
  };
  return make(std::move(rels), 4, MonomialOrder::Family::DegLex, {}, {}, Field(), {"a", "b", "c", "d"});
}

/// d*x = x*d + 1: solvable, not graded.
inline AlgebraPtr weyl() {
  auto one = Monomial(2);
  return make({RelationSpec{1, 0, Q(1), {Term{Q(1), one}}}}, 2, MonomialOrder::Family::DegLex, {}, {},
              Field(), {"x", "d"});
}

/// Header text describing A, usable as a prefix for parse_problem.
inline std::string header(const AlgebraPtr& A, const FreeModule& L) {
  FreeModule plain(A, L.shifts(),
                   L.order()->kind() == ModuleOrder::Kind::POT ? ModuleOrder::pot() : ModuleOrder::top());
  Problem p{A, plain, {}, std::nullopt, false, {}};
  return render_problem(p);
}

/// Parses polynomial text over A.
inline Polynomial poly(const AlgebraPtr& A, const std::string& text) {
  FreeModule L(A, {0});
  const Problem p = parse_problem(header(A, L) + "elems [" + text + "];");
  return L.component(p.elements.at(0), 0);
}

/// Parses a vector of component texts as an element of L.
inline ModuleElement elem(const FreeModule& L, const std::vector<std::string>& comps) {
  std::vector<Polynomial> ps;
  for (const std::string& c : comps) ps.push_back(poly(L.algebra_ptr(), c));
  return L.from_components(ps);
}

inline std::vector<Monomial> monomials_of_degree(const SolvableAlgebra& A, Degree d) {
  std::vector<Monomial> out;
  const std::size_t n = A.num_gens();
  std::vector<Exponent> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, Degree left) -> void {
    if (i == n) {
      if (left == 0) out.emplace_back(e);
      return;
    }
    for (Exponent k = 0; static_cast<Degree>(k) * A.weights()[i] <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - static_cast<Degree>(k) * A.weights()[i]);
    }
    e[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

inline Coefficient small_coef(const Field& K, std::mt19937& rng, int range = 3) {
  std::uniform_int_distribution<int> dist(-range, range - 1);
  int v = dist(rng);
  if (v >= 0) ++v;  // nonzero
  return K.from_integer(v);
}

/// Random homogeneous polynomial of degree d with up to max_terms terms (nonzero if possible).
inline Polynomial random_homogeneous(const SolvableAlgebra& A, Degree d, std::mt19937& rng,
                                     std::size_t max_terms = 3) {
  const auto monos = monomials_of_degree(A, d);
  if (monos.empty()) return A.zero();
  std::uniform_int_distribution<std::size_t> count(1, max_terms), pick(0, monos.size() - 1);
  std::vector<Term> terms;
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) terms.push_back(Term{small_coef(A.field(), rng), monos[pick(rng)]});
  Polynomial f = A.from_terms(std::move(terms));
  if (f.is_zero()) f = A.term(A.field().one(), monos[pick(rng)]);
  return f;
}

/// Random homogeneous element of L of degree d; components whose shift
/// exceeds d stay zero.
inline ModuleElement random_element(const FreeModule& L, Degree d, std::mt19937& rng,
                                    std::size_t max_terms = 3) {
  std::vector<Polynomial> comps;
  std::bernoulli_distribution use(0.6);
  for (std::size_t i = 0; i < L.rank(); ++i) {
    const Degree di = d - L.shift(i);
    comps.push_back(di >= 0 && use(rng) ? random_homogeneous(L.algebra(), di, rng, max_terms)
                                        : L.algebra().zero());
  }
  ModuleElement x = L.from_components(comps);
  if (x.is_zero()) {
    for (std::size_t i = 0; i < L.rank(); ++i)
      if (d - L.shift(i) >= 0) {
        comps[i] = random_homogeneous(L.algebra(), d - L.shift(i), rng, max_terms);
        return L.from_components(comps);
      }
  }
  return x;
}

/// Exponent vector of a monomial.
inline oracle::Exps exps(const Monomial& m) { return oracle::Exps(m.begin(), m.end()); }

inline oracle::CPoly to_cpoly(const Polynomial& f) {
  oracle::CPoly out;
  for (const Term& t : f) out[exps(t.mono)] = t.coef.rational();
  return out;
}

inline Polynomial from_cpoly(const SolvableAlgebra& A, const oracle::CPoly& f) {
  std::vector<Term> terms;
  for (const auto& [e, c] : f)
    terms.push_back(Term{A.field().from_rational(c), Monomial(std::vector<Exponent>(e.begin(), e.end()))});
  return A.from_terms(std::move(terms));
}

inline oracle::COrder corder(const SolvableAlgebra& A) {
  return oracle::COrder{A.order().family() == MonomialOrder::Family::DegRevLex, A.order().precedence(),
                        std::vector<unsigned>(A.weights().begin(), A.weights().end())};
}

/// Relation table of A in the word-rewriter's format.
inline std::vector<oracle::WordRelation> word_relations(const SolvableAlgebra& A) {
  std::vector<oracle::WordRelation> out;
  for (std::size_t j = 0; j < A.num_gens(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const Relation& r = A.relation(j, i);
      oracle::WordRelation w{j, i, r.scalar.rational(), {}};
      for (const Term& t : r.tail) w.tail.emplace_back(t.coef.rational(), exps(t.mono));
      out.push_back(std::move(w));
    }
  return out;
}

}  // namespace fx

namespace fx {

/// A presentation built from a unit-free core by adding basis vectors f_j
/// together with relations c_j f_j - h_j, then disguising the core
/// relations with multiples of those. Minimizing must undo exactly that.
struct Planted {
  Presentation presentation;
  /// Ambient positions of the core basis vectors, ascending.
  std::vector<std::size_t> core;
  std::size_t pivots = 0;
  /// Original relation id -> core relation (ambient coordinates), for those
  /// expected to survive.
  std::vector<std::pair<std::size_t, ModuleElement>> survivors;
  std::vector<std::size_t> vanishing;
};

inline Planted planted_presentation(const AlgebraPtr& A, std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 1), two(1, 2);
  const std::size_t core_rank = two(rng), extra = two(rng);
  std::vector<Degree> core_shifts, extra_shifts;
  for (std::size_t i = 0; i < core_rank; ++i) core_shifts.push_back(coin(rng));
  for (std::size_t i = 0; i < extra; ++i) extra_shifts.push_back(2 + coin(rng));

  // scatter the extra basis vectors among the core ones
  std::vector<bool> is_extra(core_rank + extra, false);
  for (std::size_t i = 0; i < extra; ++i) is_extra[i] = true;
  std::shuffle(is_extra.begin(), is_extra.end(), rng);
  std::vector<Degree> shifts;
  std::vector<std::size_t> core_pos, extra_pos;
  for (std::size_t k = 0, c = 0, e = 0; k < is_extra.size(); ++k) {
    if (is_extra[k]) {
      extra_pos.push_back(k);
      shifts.push_back(extra_shifts[e++]);
    } else {
      core_pos.push_back(k);
      shifts.push_back(core_shifts[c++]);
    }
  }
  const FreeModule L(A, shifts);
  const FreeModule C(A, core_shifts);
  auto lift = [&](const ModuleElement& x) {
    std::vector<ModuleTerm> terms;
    for (const ModuleTerm& t : x) terms.push_back(ModuleTerm{t.coef, t.mono, core_pos[t.index]});
    return L.from_terms(std::move(terms));
  };

  std::vector<ModuleElement> planted;
  std::vector<Degree> planted_deg;
  for (std::size_t j = 0; j < extra; ++j) {
    const Degree d = extra_shifts[j];
    const ModuleElement h = lift(random_element(C, d, rng, 2));
    const Polynomial unit = A->constant(small_coef(A->field(), rng));
    planted.push_back(L.sub(L.multiply(unit, L.basis(extra_pos[j])), h));
    planted_deg.push_back(d);
  }

  Planted out{{L, {}}, core_pos, extra, {}, {}};
  struct Entry {
    ModuleElement rel;
    std::optional<ModuleElement> survives;
    bool vanishes = false;
  };
  std::vector<Entry> entries;
  for (const ModuleElement& p : planted) entries.push_back({p, std::nullopt, false});
  const std::size_t core_count = two(rng) + coin(rng);
  for (std::size_t i = 0; i < core_count; ++i) {
    const Degree d = 2 + two(rng);
    const ModuleElement r = lift(random_element(C, d, rng, 3));
    ModuleElement disguised = r;
    for (std::size_t j = 0; j < extra; ++j)
      if (d > planted_deg[j] && coin(rng))
        disguised = L.add(disguised, L.multiply(random_homogeneous(*A, d - planted_deg[j], rng, 2), planted[j]));
    entries.push_back({disguised, r, false});
  }
  if (coin(rng)) {
    const std::size_t j = std::uniform_int_distribution<std::size_t>(0, extra - 1)(rng);
    entries.push_back({L.multiply(random_homogeneous(*A, 1, rng, 2), planted[j]), std::nullopt, true});
  }
  std::shuffle(entries.begin(), entries.end(), rng);
  for (std::size_t id = 0; id < entries.size(); ++id) {
    out.presentation.relations.push_back(entries[id].rel);
    if (entries[id].survives) out.survivors.emplace_back(id, *entries[id].survives);
    if (entries[id].vanishes) out.vanishing.push_back(id);
  }
  return out;
}

}  // namespace fx

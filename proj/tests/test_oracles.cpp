// The oracles are checked here against values worked out by hand, so a
// failure elsewhere can be blamed on the library rather than the reference.
#include <set>

#include "doctest.h"
#include "oracles.hpp"

using namespace oracle;

namespace {

mpq_class q(long a, long b = 1) { return mpq_class(mpz_class(a), mpz_class(b)); }

}  // namespace

TEST_CASE("word rewriting") {
  // no relation: commuting variables
  auto p = rewrite_product(2, {}, {0, 1}, {1, 0});
  CHECK(p == std::map<Exps, mpq_class>{{{1, 1}, q(1)}});

  // y x = 2 x y
  const std::vector<WordRelation> plane = {{1, 0, q(2), {}}};
  p = rewrite_product(2, plane, {0, 1}, {1, 0});
  CHECK(p == std::map<Exps, mpq_class>{{{1, 1}, q(2)}});
  // y^2 x^2 = 16 x^2 y^2
  p = rewrite_product(2, plane, {0, 2}, {2, 0});
  CHECK(p == std::map<Exps, mpq_class>{{{2, 2}, q(16)}});

  // Weyl: d x = x d + 1, so d x^2 = x^2 d + 2x
  const std::vector<WordRelation> weyl = {{1, 0, q(1), {{q(1), {0, 0}}}}};
  p = rewrite_product(2, weyl, {0, 1}, {2, 0});
  CHECK(p == std::map<Exps, mpq_class>{{{2, 1}, q(1)}, {{1, 0}, q(2)}});
}

TEST_CASE("orderings") {
  const COrder deglex{false, {0, 1, 2}, {1, 1, 1}};
  CHECK(deglex.greater({0, 0, 1}, {1, 0, 0}));
  CHECK(deglex.greater({0, 1, 1}, {2, 0, 0}));
  CHECK(deglex.greater({1, 0, 0}, {0, 0, 0}));
  const COrder revlex{true, {0, 1, 2}, {1, 1, 1}};
  // degrevlex: smaller power of the lowest variable wins
  CHECK(revlex.greater({0, 2, 0}, {1, 0, 1}));
  CHECK(deglex.greater({1, 0, 1}, {0, 2, 0}));
  const COrder weighted{false, {0, 1}, {1, 3}};
  CHECK(weighted.greater({0, 1}, {2, 0}));
  CHECK(leading({{{2, 0, 0}, q(1)}, {{0, 1, 1}, q(3)}}, deglex) == Exps{0, 1, 1});
}

TEST_CASE("commutative Gröbner basis of a hand example") {
  // x above y: {x^2, xy + y^2} -> {x^2, xy + y^2, y^3}
  const COrder ord{false, {1, 0}, {1, 1}};
  const std::vector<CPoly> gens = {{{{2, 0}, q(1)}}, {{{1, 1}, q(1)}, {{0, 2}, q(1)}}};
  auto gb = commutative_gb(gens, ord);
  REQUIRE(gb.size() == 3);
  std::set<Exps> leads;
  for (const auto& g : gb) leads.insert(leading(g, ord));
  CHECK(leads == std::set<Exps>{{2, 0}, {1, 1}, {0, 3}});
  // ideal containing 1
  const std::vector<CPoly> unit = {{{{1, 0}, q(1)}, {{0, 0}, q(-1)}}, {{{1, 0}, q(1)}}};
  gb = commutative_gb(unit, ord);
  REQUIRE(gb.size() == 1);
  CHECK(gb[0] == CPoly{{{0, 0}, q(1)}});
}

TEST_CASE("linear algebra") {
  CHECK(rank({{q(1), q(2)}, {q(2), q(4)}}) == 1);
  CHECK(rank({{q(1), q(0)}, {q(0), q(1, 3)}}) == 2);
  CHECK(rank({}) == 0);
  const auto ns = nullspace({{q(1), q(1), q(0)}, {q(0), q(1), q(1)}}, 3);
  REQUIRE(ns.size() == 1);
  const auto& v = ns[0];
  CHECK(v[0] + v[1] == 0);
  CHECK(v[1] + v[2] == 0);
  CHECK(v[0] != 0);
  CHECK(nullspace({}, 2).size() == 2);
}

TEST_CASE("monomial enumeration") {
  CHECK(monomials(3, 2).size() == 6);
  CHECK(monomials(2, 4).size() == 5);
  CHECK(monomials(3, 0).size() == 1);
}

TEST_CASE("Betti numbers of monomial quotients") {
  // Koszul complex
  auto b = monomial_betti(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  REQUIRE(b.size() == 4);
  CHECK(b[0] == std::map<unsigned, std::size_t>{{0, 1}});
  CHECK(b[1] == std::map<unsigned, std::size_t>{{1, 3}});
  CHECK(b[2] == std::map<unsigned, std::size_t>{{2, 3}});
  CHECK(b[3] == std::map<unsigned, std::size_t>{{3, 1}});
  // principal ideal
  b = monomial_betti(2, {{2, 1}});
  REQUIRE(b.size() == 2);
  CHECK(b[1] == std::map<unsigned, std::size_t>{{3, 1}});
  // (x^2, xy, y^2): 1, 3 in degree 2, 2 in degree 3
  b = monomial_betti(2, {{2, 0}, {1, 1}, {0, 2}});
  REQUIRE(b.size() == 3);
  CHECK(b[1] == std::map<unsigned, std::size_t>{{2, 3}});
  CHECK(b[2] == std::map<unsigned, std::size_t>{{3, 2}});
  // redundant generator does not count
  b = monomial_betti(2, {{1, 0}, {2, 0}});
  REQUIRE(b.size() == 2);
  CHECK(b[1] == std::map<unsigned, std::size_t>{{1, 1}});
}

TEST_CASE("minimal monomial generators") {
  CHECK(monomial_min_gens({{1, 0}, {2, 0}, {0, 1}}) == 2);
  CHECK(monomial_min_gens({{2, 0}, {1, 0}}) == 1);
  CHECK(monomial_min_gens({{1, 1}, {1, 1}}) == 1);
  CHECK(monomial_min_gens({{2, 0}, {1, 1}, {0, 2}}) == 3);
}

TEST_CASE("syzygies in a fixed degree") {
  const std::vector<CPoly> xy = {{{{1, 0}, q(1)}}, {{{0, 1}, q(1)}}};
  CHECK(syzygies_in_degree(2, xy, 1).empty());
  CHECK(syzygies_in_degree(2, xy, 2).size() == 1);
  // degree 3: x and y times the Koszul syzygy
  CHECK(syzygies_in_degree(2, xy, 3).size() == 2);
}

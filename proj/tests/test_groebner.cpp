#include <doctest.h>

#include <algorithm>

#include "stiefel/groebner.hpp"
#include "support.hpp"

using namespace testing;

namespace {

GroebnerBasis gb_of(const std::vector<std::string>& gens, const Variables& vars = xy()) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(g, vars));
  return buchberger(Ideal(vars, ps));
}

std::vector<Polynomial> polys(const std::vector<std::string>& gens, const Variables& vars = xy()) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(g, vars));
  return ps;
}

}  // namespace

TEST_SUITE("monomial order") {
  TEST_CASE("degrevlex basics") {
    auto o = MonomialOrder::degrevlex(3);
    CHECK(o.compare(Monomial{1, 0, 0}, Monomial{0, 1, 0}) == 1);  // x > y
    CHECK(o.compare(Monomial{0, 0, 2}, Monomial{1, 0, 0}) == 1);  // degree first
    CHECK(o.compare(Monomial{1, 0, 1}, Monomial{0, 2, 0}) == -1);  // xz < y^2
    CHECK(o.compare(Monomial{0, 0, 0}, Monomial{0, 0, 1}) == -1);
  }

  TEST_CASE("lex basics") {
    auto o = MonomialOrder::lex(2);
    CHECK(o.compare(Monomial{1, 0}, Monomial{0, 5}) == 1);
    CHECK(o.compare(Monomial{1, 1}, Monomial{1, 0}) == 1);
  }
}

TEST_SUITE("buchberger") {
  TEST_CASE("already reduced input") {
    auto gb = gb_of({"x^2-1", "y"});
    CHECK(gb.elements() == polys({"y", "x^2-1"}));
  }

  TEST_CASE("inconsistent system") {
    auto gb = gb_of({"x", "x-1"});
    CHECK(gb.is_unit());
    CHECK(standard_monomials(gb).empty());
  }

  TEST_CASE("normal form examples") {
    auto gb = gb_of({"x^2-y"});
    CHECK(normal_form(P("x^3", xy()), gb) == P("x*y", xy()));
    for (const auto& g : gb.elements()) CHECK(normal_form(g, gb).is_zero());
  }

  TEST_CASE("zero-dimensionality") {
    CHECK(is_zero_dimensional(gb_of({"x^2-1", "y"})));
    CHECK_FALSE(is_zero_dimensional(gb_of({"x*y-1"})));
    CHECK_THROWS_AS(standard_monomials(gb_of({"x*y-1"})), NotZeroDimensional);
    CHECK(is_zero_dimensional(gb_of({"1"})));
  }

  TEST_CASE("standard monomials") {
    auto basis = standard_monomials(gb_of({"x^2", "y^2"}));
    std::vector<Monomial> expected = {Monomial{0, 0}, Monomial{0, 1}, Monomial{1, 0}, Monomial{1, 1}};
    CHECK(basis == expected);
  }

  TEST_CASE("contains_one") {
    auto o = MonomialOrder::degrevlex(2);
    CHECK_FALSE(contains_one(polys({"x", "x"}), o));
    CHECK(contains_one(polys({"x-1", "x"}), o));
    CHECK_FALSE(contains_one({}, o));
  }

  TEST_CASE("worked-example dimensions") {
    auto a = frame(kMappingA, 1);
    auto gb = buchberger(minors_ideal(a));
    CHECK(is_zero_dimensional(gb));
    CHECK(standard_monomials(gb).size() == 23);
    auto b = frame(kMappingB, 1);
    CHECK(standard_monomials(buchberger(minors_ideal(b))).size() == 21);
  }

  TEST_CASE("worked example a is certified by its corner minor") {
    auto a = frame(kMappingA, 1);
    Ideal ideal = minors_ideal(a);
    auto gens = ideal.generators();
    gens.push_back(a.columns(0, 1));
    CHECK(contains_one(gens, ideal.order()));
  }

  TEST_CASE("reduced basis is unique") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 25; ++i) {
      std::vector<Polynomial> gens = {random_poly(rng, xy(), 3, 4), random_poly(rng, xy(), 3, 4)};
      auto base = buchberger(Ideal(xy(), gens));
      auto extended = gens;
      extended.push_back(random_poly(rng, xy(), 2, 3) * gens[0] + random_poly(rng, xy(), 2, 3) * gens[1]);
      std::reverse(extended.begin(), extended.end());
      CHECK(buchberger(Ideal(xy(), extended)) == base);
      for (const auto& g : base.elements()) CHECK(g.terms().begin() != g.terms().end());
    }
  }

  TEST_CASE("dimension is invariant under generator permutations") {
    auto a = frame(kMappingB, 1);
    auto gens = minors_ideal(a).generators();
    std::sort(gens.begin(), gens.end(), [](const Polynomial& p, const Polynomial& q) { return to_string(p) < to_string(q); });
    do {
      CHECK(standard_monomials(buchberger(Ideal(xy(), gens))).size() == 21);
    } while (std::next_permutation(gens.begin(), gens.end(), [](const Polynomial& p, const Polynomial& q) {
      return to_string(p) < to_string(q);
    }));
  }

  TEST_CASE("complete intersections have dimension a*b") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> deg(1, 4);
    for (int i = 0; i < 30; ++i) {
      int a = deg(rng), b = deg(rng);
      Rational c1 = random_rational(rng), c2 = random_rational(rng);
      Polynomial f = pow(P("x", xy()), a) - Polynomial::constant(xy(), c1);
      Polynomial g = pow(P("y", xy()), b) - Polynomial::constant(xy(), c2);
      CHECK(standard_monomials(buchberger(Ideal(xy(), {f, g}))).size() == static_cast<std::size_t>(a * b));
      CHECK(standard_monomials(buchberger(Ideal(xy(), {f, g}, MonomialOrder::lex(2)))).size() ==
            static_cast<std::size_t>(a * b));
    }
  }

  TEST_CASE("membership and multiplicativity of normal forms") {
    std::mt19937_64 rng(77);
    auto gens = minors_ideal(frame(kMappingA, 1)).generators();
    auto gb = buchberger(Ideal(xy(), gens));
    for (int i = 0; i < 20; ++i) {
      Polynomial combo(xy());
      for (const auto& g : gens) combo += random_poly(rng, xy(), 2, 3) * g;
      CHECK(normal_form(combo, gb).is_zero());
      Polynomial p = random_poly(rng, xy(), 4, 4), q = random_poly(rng, xy(), 4, 4);
      CHECK(normal_form(p * q, gb) == normal_form(normal_form(p, gb) * normal_form(q, gb), gb));
      Polynomial nf = normal_form(p, gb);
      CHECK(normal_form(nf, gb) == nf);
    }
  }

  TEST_CASE("dimension does not depend on the order") {
    auto gens = minors_ideal(frame(kMappingA, 1)).generators();
    CHECK(standard_monomials(buchberger(Ideal(xy(), gens, MonomialOrder::lex(2)))).size() == 23);
  }
}

#include <catch2/catch_amalgamated.hpp>

#include "isoclass/groebner.hpp"
#include "isoclass/latin.hpp"
#include "test_util.hpp"

using namespace isoclass;

namespace {

// term list -> polynomial; each entry is {coeff, exponents}
Polynomial P(const PrimeField& F, MonomialOrder ord, std::vector<std::pair<int, std::vector<int>>> tt) {
  std::vector<Term> terms;
  for (auto& [c, exps] : tt) {
    std::vector<std::uint8_t> e(exps.begin(), exps.end());
    terms.push_back({Monomial(std::move(e)), c});
  }
  return poly_normalize(std::move(terms), F, ord);
}

std::vector<Polynomial> reduced_gb(const std::vector<Polynomial>& gens, const PrimeField& F,
                                   MonomialOrder ord) {
  return reduce_basis(buchberger(gens, F, ord), F, ord);
}

}  // namespace

TEST_CASE("monomial orders") {
  PrimeField F(2);
  auto m = [](std::vector<int> exps) {
    return Monomial(std::vector<std::uint8_t>(exps.begin(), exps.end()));
  };
  SECTION("lex: x > y^5") {
    CHECK(mono_less(m({0, 5}), m({1, 0}), MonomialOrder::lex));
  }
  SECTION("degrevlex: y^5 > x") {
    CHECK(mono_less(m({1, 0}), m({0, 5}), MonomialOrder::degrevlex));
  }
  SECTION("degrevlex tie-break: x*z < y^2") {
    CHECK(mono_less(m({1, 0, 1}), m({0, 2, 0}), MonomialOrder::degrevlex));
  }
  SECTION("1 is minimal") {
    for (auto ord : {MonomialOrder::lex, MonomialOrder::degrevlex}) CHECK(mono_less(m({0, 0}), m({0, 1}), ord));
  }
}

TEST_CASE("normal form") {
  PrimeField F(2);
  MonomialOrder ord = MonomialOrder::lex;
  SECTION("f reduces to zero modulo itself") {
    Polynomial f = P(F, ord, {{1, {2, 1}}, {1, {0, 1}}});
    CHECK(normal_form(f, {f}, F, ord).empty());
  }
  SECTION("x^2 modulo x^2+x is x") {
    Polynomial f = P(F, ord, {{1, {2}}});
    Polynomial g = P(F, ord, {{1, {2}}, {1, {1}}});
    CHECK(normal_form(f, {g}, F, ord) == P(F, ord, {{1, {1}}}));
  }
  SECTION("xy modulo {x+y, y^2+y} is y") {
    Polynomial f = P(F, ord, {{1, {1, 1}}});
    std::vector<Polynomial> G = {P(F, ord, {{1, {1, 0}}, {1, {0, 1}}}), P(F, ord, {{1, {0, 2}}, {1, {0, 1}}})};
    CHECK(normal_form(f, G, F, ord) == P(F, ord, {{1, {0, 1}}}));
  }
  SECTION("result has no monomial divisible by a leading monomial") {
    TestRng rng(61);
    PrimeField F3(3);
    for (int it = 0; it < 50; ++it) {
      MonomialOrder o = it % 2 ? MonomialOrder::lex : MonomialOrder::degrevlex;
      auto rand_poly = [&] {
        std::vector<Term> terms;
        for (int t = 1 + rng.below(4); t > 0; --t)
          terms.push_back({Monomial(std::vector<std::uint8_t>{std::uint8_t(rng.below(3)), std::uint8_t(rng.below(3)),
                                                              std::uint8_t(rng.below(3))}),
                           1 + rng.below(2)});
        return poly_normalize(std::move(terms), F3, o);
      };
      std::vector<Polynomial> G = {rand_poly(), rand_poly()};
      G.erase(std::remove_if(G.begin(), G.end(), [](const Polynomial& g) { return g.empty(); }), G.end());
      if (G.empty()) continue;
      Polynomial r = normal_form(rand_poly(), G, F3, o);
      for (const Term& t : r)
        for (const Polynomial& g : G) CHECK_FALSE(mono_divides(g[0].m, t.m));
    }
  }
}

TEST_CASE("buchberger on tiny ideals") {
  PrimeField F(2);
  MonomialOrder ord = MonomialOrder::lex;
  SECTION("a single generator is its own basis") {
    Polynomial x = P(F, ord, {{1, {1, 0}}});
    auto gb = reduced_gb({x}, F, ord);
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == x);
  }
  SECTION("{x+y, x^2+x} over F2 lex reduces to {x+y, y^2+y}") {
    auto gb = reduced_gb({P(F, ord, {{1, {1, 0}}, {1, {0, 1}}}), P(F, ord, {{1, {2, 0}}, {1, {1, 0}}})}, F, ord);
    REQUIRE(gb.size() == 2);
    // sorted ascending by leading monomial: y^2+y first, then x+y
    CHECK(gb[0] == P(F, ord, {{1, {0, 2}}, {1, {0, 1}}}));
    CHECK(gb[1] == P(F, ord, {{1, {1, 0}}, {1, {0, 1}}}));
  }
  SECTION("all S-polynomials of the final basis reduce to zero") {
    TestRng rng(67);
    PrimeField F3(3);
    for (int it = 0; it < 25; ++it) {
      MonomialOrder o = it % 2 ? MonomialOrder::lex : MonomialOrder::degrevlex;
      std::vector<Polynomial> gens;
      for (int g = 0; g < 3; ++g) {
        std::vector<Term> terms;
        for (int t = 1 + rng.below(3); t > 0; --t)
          terms.push_back({Monomial(std::vector<std::uint8_t>{std::uint8_t(rng.below(3)), std::uint8_t(rng.below(3)),
                                                              std::uint8_t(rng.below(2))}),
                           1 + rng.below(2)});
        gens.push_back(poly_normalize(std::move(terms), F3, o));
      }
      auto gb = buchberger(gens, F3, o);
      for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = i + 1; j < gb.size(); ++j) {
          Monomial l = mono_lcm(gb[i][0].m, gb[j][0].m);
          Polynomial s = poly_addmul(Polynomial{}, 1, mono_div(l, gb[i][0].m), gb[i], F3, o);
          s = poly_addmul(s, F3.neg(1), mono_div(l, gb[j][0].m), gb[j], F3, o);
          CHECK(normal_form(s, gb, F3, o).empty());
        }
    }
  }
}

TEST_CASE("reduced basis") {
  MonomialOrder ord = MonomialOrder::lex;
  SECTION("{x, 2x+y} over F3 reduces to {y, x}") {
    PrimeField F(3);
    auto gb = reduce_basis({P(F, ord, {{1, {1, 0}}}), P(F, ord, {{2, {1, 0}}, {1, {0, 1}}})}, F, ord);
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == P(F, ord, {{1, {0, 1}}}));
    CHECK(gb[1] == P(F, ord, {{1, {1, 0}}}));
  }
  SECTION("{x^2+x, x} over F2 reduces to {x}") {
    PrimeField F(2);
    auto gb = reduce_basis({P(F, ord, {{1, {2}}, {1, {1}}}), P(F, ord, {{1, {1}}})}, F, ord);
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == P(F, ord, {{1, {1}}}));
  }
  SECTION("invariant under generator shuffling and redundant-generator injection") {
    TestRng rng(71);
    PrimeField F(2);
    for (int it = 0; it < 20; ++it) {
      MonomialOrder o = it % 2 ? MonomialOrder::lex : MonomialOrder::degrevlex;
      std::vector<Polynomial> gens;
      for (int g = 0; g < 3; ++g) {
        std::vector<Term> terms;
        for (int t = 1 + rng.below(3); t > 0; --t)
          terms.push_back({Monomial(std::vector<std::uint8_t>{std::uint8_t(rng.below(2)), std::uint8_t(rng.below(2)),
                                                              std::uint8_t(rng.below(2))}),
                           1});
        gens.push_back(poly_normalize(std::move(terms), F, o));
      }
      auto base = reduced_gb(gens, F, o);
      std::vector<Polynomial> mutated = gens;
      for (int i = int(mutated.size()) - 1; i > 0; --i) std::swap(mutated[i], mutated[rng.below(i + 1)]);
      if (!gens[0].empty())
        mutated.push_back(poly_mul(gens[0], P(F, o, {{1, {1, 1, 0}}, {1, {0, 0, 0}}}), F, o));
      CHECK(reduced_gb(mutated, F, o) == base);
    }
  }
}

TEST_CASE("standard monomial counting") {
  MonomialOrder ord = MonomialOrder::lex;
  PrimeField F(2);
  SECTION("{x+1, y} has a single point") {
    auto gb = reduced_gb({P(F, ord, {{1, {1, 0}}, {1, {0, 0}}}), P(F, ord, {{1, {0, 1}}})}, F, ord);
    CHECK(standard_monomial_count(gb, 2, 2) == 1);
  }
  SECTION("field equations only: the whole plane") {
    auto gb = reduced_gb({P(F, ord, {{1, {2, 0}}, {1, {1, 0}}}), P(F, ord, {{1, {0, 2}}, {1, {0, 1}}})}, F, ord);
    CHECK(standard_monomial_count(gb, 2, 2) == 4);
  }
  SECTION("unit ideal: empty variety") {
    auto gb = reduced_gb({P(F, ord, {{1, {0, 0}}})}, F, ord);
    CHECK(standard_monomial_count(gb, 2, 2) == 0);
  }
  SECTION("non-zero-dimensional input is rejected") {
    auto gb = reduced_gb({P(F, ord, {{1, {1, 0}}})}, F, ord);
    CHECK_THROWS_AS(standard_monomial_count(gb, 2, 2), std::domain_error);
  }
}

TEST_CASE("isotopism and isomorphism ideals") {
  Algebra A2 = ring_of(parse_pls("12 20"), 2);
  Algebra B2 = ring_of(parse_pls("12 21"), 2);
  SECTION("shape") {
    IdealSpec s = isotopism_ideal(A2, B2);
    CHECK(s.nvars == 12);
    CHECK(s.var_names.size() == 12);
    CHECK(s.var_names[0] == "f11");
    CHECK(s.var_names[4] == "g11");
    CHECK(s.var_names[8] == "h11");
    IdealSpec si = isomorphism_ideal(A2, B2);
    CHECK(si.nvars == 4);
    CHECK_THROWS_AS(isotopism_ideal(A2, ring_of(parse_pls("000 000 000"), 2)), std::invalid_argument);
  }
  SECTION("trivial 1-dimensional case: GL(1,2)^3 is a single triple") {
    Algebra ab(2, 1);
    SolutionCount c = solution_count(isotopism_ideal(ab, ab));
    REQUIRE(c.decided());
    CHECK(c.count == 1);
  }
  SECTION("the two order-2 rings admit exactly four isotopisms over F2") {
    for (auto ord : {MonomialOrder::degrevlex, MonomialOrder::lex}) {
      SolutionCount c = solution_count(isotopism_ideal(A2, B2), ord);
      REQUIRE(c.decided());
      CHECK(c.count == 4);
    }
  }
  SECTION("and none over F3") {
    Algebra A3 = ring_of(parse_pls("12 20"), 3);
    Algebra B3 = ring_of(parse_pls("12 21"), 3);
    SolutionCount c = solution_count(isotopism_ideal(A3, B3));
    REQUIRE(c.decided());
    CHECK(c.count == 0);
  }
  SECTION("a unique isomorphism between them over F2") {
    SolutionCount c = solution_count(isomorphism_ideal(A2, B2));
    REQUIRE(c.decided());
    CHECK(c.count == 1);
  }
  SECTION("abelian self-isomorphisms are counted by |GL(2,2)| = 6") {
    Algebra ab(2, 2);
    SolutionCount c = solution_count(isomorphism_ideal(ab, ab));
    REQUIRE(c.decided());
    CHECK(c.count == 6);
  }
  SECTION("abelian vs non-abelian: no isomorphism") {
    Algebra ab(2, 2);
    SolutionCount c = solution_count(isomorphism_ideal(ab, A2));
    REQUIRE(c.decided());
    CHECK(c.count == 0);
  }
  SECTION("dropping the determinants admits singular triples: strictly larger count") {
    SolutionCount with = solution_count(isotopism_ideal(A2, B2, true));
    SolutionCount without = solution_count(isotopism_ideal(A2, B2, false));
    REQUIRE(with.decided());
    REQUIRE(without.decided());
    CHECK(without.count > with.count);
  }
  SECTION("budget overrun reports undecided, never a count") {
    CHECK_FALSE(solution_count(isotopism_ideal(A2, B2), MonomialOrder::degrevlex, 1).decided());
    CHECK_THROWS_AS(buchberger(isotopism_ideal(A2, B2).gens, PrimeField(2), MonomialOrder::degrevlex, 1),
                    BudgetExceeded);
  }
}

TEST_CASE("solution counts are independent of the monomial order") {
  TestRng rng(73);
  for (int it = 0; it < 6; ++it) {
    int p = it % 2 ? 3 : 2;
    Algebra A = random_algebra(rng, p, 2);
    Algebra B = apply_isotopism(A, random_triple(rng, p, 2));
    SolutionCount lex = solution_count(isotopism_ideal(A, B), MonomialOrder::lex);
    SolutionCount drl = solution_count(isotopism_ideal(A, B), MonomialOrder::degrevlex);
    REQUIRE(lex.decided());
    REQUIRE(drl.decided());
    CHECK(lex.count == drl.count);
    CHECK(lex.count > 0);  // isotopic by construction
  }
}

TEST_CASE("polynomial printer") {
  PrimeField F(3);
  MonomialOrder ord = MonomialOrder::lex;
  CHECK(poly_to_string({}, {"x", "y"}) == "0");
  CHECK(poly_to_string(P(F, ord, {{1, {1, 1}}, {2, {0, 3}}, {1, {0, 0}}}), {"x", "y"}) == "x*y + 2*y^3 + 1");
}

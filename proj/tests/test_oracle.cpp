#include <catch2/catch_amalgamated.hpp>

#include "isoclass/groebner.hpp"
#include "isoclass/latin.hpp"
#include "isoclass/oracle.hpp"
#include "test_util.hpp"

using namespace isoclass;

TEST_CASE("GL orders") {
  CHECK(gl_order(1, 2) == 1);
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(2, 3) == 48);
  CHECK(gl_order(3, 2) == 168);
  CHECK(gl_order(3, 3) == 11232);
}

TEST_CASE("isomorphism enumeration") {
  SECTION("1-dim idempotent ring over F3: only the identity") {
    Algebra A(3, 1);
    A.at(0, 0, 0) = 1;
    auto maps = enumerate_isomorphisms(A, A);
    REQUIRE(maps.size() == 1);
    CHECK(maps[0] == Mat::identity(3, 1));
  }
  SECTION("the two order-2 rings: a unique isomorphism") {
    Algebra A = ring_of(parse_pls("12 20"), 2);
    Algebra B = ring_of(parse_pls("12 21"), 2);
    auto maps = enumerate_isomorphisms(A, B);
    REQUIRE(maps.size() == 1);
    Mat f(2, 2);
    f.at(0, 0) = 1;
    f.at(1, 0) = f.at(1, 1) = 1;
    CHECK(maps[0] == f);
  }
  SECTION("abelian self-maps: all of GL(2,2)") {
    Algebra ab(2, 2);
    CHECK(enumerate_isomorphisms(ab, ab).size() == 6);
  }
  SECTION("every returned map is an isomorphism triple") {
    TestRng rng(79);
    for (int it = 0; it < 20; ++it) {
      int p = it % 2 ? 3 : 2;
      Algebra A = random_algebra(rng, p, 2);
      Algebra B = apply_isotopism(A, random_triple(rng, p, 2));
      for (const Mat& f : enumerate_isomorphisms(A, B)) CHECK(verify_isotopism(A, B, {f, f, f}));
    }
  }
  SECTION("budget is enforced") {
    Algebra big(5, 3);
    CHECK_THROWS_AS(enumerate_isomorphisms(big, big, 1000), BudgetExceeded);
  }
}

TEST_CASE("isotopism enumeration by full scan") {
  Algebra A = ring_of(parse_pls("12 20"), 2);
  Algebra B = ring_of(parse_pls("12 21"), 2);
  SECTION("the order-2 rings admit exactly four isotopisms over F2") {
    IsotopismScan scan = enumerate_isotopisms(A, B);
    REQUIRE(scan.decided);
    CHECK(scan.count == 4);
    REQUIRE(scan.triples.size() == 4);
    for (const IsotopismTriple& t : scan.triples) CHECK(verify_isotopism(A, B, t));
  }
  SECTION("and none over F3") {
    IsotopismScan scan = enumerate_isotopisms(ring_of(parse_pls("12 20"), 3), ring_of(parse_pls("12 21"), 3));
    REQUIRE(scan.decided);
    CHECK(scan.count == 0);
  }
  SECTION("abelian 1-dim self-pair: a single triple") {
    Algebra ab(2, 1);
    IsotopismScan scan = enumerate_isotopisms(ab, ab);
    REQUIRE(scan.decided);
    CHECK(scan.count == 1);
  }
  SECTION("count-only agrees with the listed triples") {
    IsotopismScan full = enumerate_isotopisms(A, B, false);
    IsotopismScan counted = enumerate_isotopisms(A, B, true);
    CHECK(counted.count == full.count);
    CHECK(counted.triples.empty());
  }
  SECTION("isomorphisms embed into the isotopism list") {
    TestRng rng(83);
    for (int it = 0; it < 10; ++it) {
      int p = it % 2 ? 3 : 2;
      Algebra X = random_algebra(rng, p, 2);
      Algebra Y = apply_isotopism(X, random_triple(rng, p, 2));
      IsotopismScan scan = enumerate_isotopisms(X, Y);
      REQUIRE(scan.decided);
      for (const Mat& f : enumerate_isomorphisms(X, Y)) {
        IsotopismTriple diag{f, f, f};
        bool found = false;
        for (const IsotopismTriple& t : scan.triples)
          found = found || (t.f == diag.f && t.g == diag.g && t.h == diag.h);
        CHECK(found);
      }
    }
  }
  SECTION("budget overrun is an undecided result") {
    CHECK_FALSE(enumerate_isotopisms(A, B, true, 10).decided);
  }
}

TEST_CASE("oracle counts agree with the polynomial engine") {
  TestRng rng(89);
  for (int it = 0; it < 8; ++it) {
    int p = it % 2 ? 3 : 2;
    Algebra A = random_algebra(rng, p, 2);
    Algebra B = rng.below(2) ? apply_isotopism(A, random_triple(rng, p, 2)) : random_algebra(rng, p, 2);
    IsotopismScan scan = enumerate_isotopisms(A, B, true);
    REQUIRE(scan.decided);
    SolutionCount isot = solution_count(isotopism_ideal(A, B));
    REQUIRE(isot.decided());
    CHECK(isot.count == scan.count);
    SolutionCount isom = solution_count(isomorphism_ideal(A, B));
    REQUIRE(isom.decided());
    CHECK(isom.count == (long long)enumerate_isomorphisms(A, B).size());
  }
}

TEST_CASE("backtracking existence") {
  Algebra A = ring_of(parse_pls("12 20"), 2);
  Algebra B = ring_of(parse_pls("12 21"), 2);
  SECTION("finds a verified witness when one exists") {
    ExistenceResult r = isotopism_exists(A, B);
    REQUIRE(r.status == Tri::yes);
    REQUIRE(r.witness.has_value());
    CHECK(verify_isotopism(A, B, *r.witness));
  }
  SECTION("proves non-existence over F3") {
    ExistenceResult r = isotopism_exists(ring_of(parse_pls("12 20"), 3), ring_of(parse_pls("12 21"), 3));
    CHECK(r.status == Tri::no);
  }
  SECTION("agrees with the full scan on random pairs") {
    TestRng rng(97);
    for (int it = 0; it < 30; ++it) {
      int p = it % 2 ? 3 : 2;
      Algebra X = random_algebra(rng, p, 2);
      Algebra Y = rng.below(2) ? apply_isotopism(X, random_triple(rng, p, 2)) : random_algebra(rng, p, 2);
      IsotopismScan scan = enumerate_isotopisms(X, Y, true);
      REQUIRE(scan.decided);
      ExistenceResult r = isotopism_exists(X, Y);
      CHECK(r.status == (scan.count > 0 ? Tri::yes : Tri::no));
      if (r.witness) CHECK(verify_isotopism(X, Y, *r.witness));
    }
  }
  SECTION("an exhausted node budget is an undecided outcome") {
    CHECK(isotopism_exists(A, B, 1).status == Tri::undecided);
  }
  SECTION("three-dimensional transported pairs always produce a verified witness") {
    // regression: independence tests inside the search must echelonize their
    // bases, which only matters once three or more vectors are involved
    TestRng rng(101);
    for (int it = 0; it < 50; ++it) {
      int p = it % 2 ? 3 : 2;
      Algebra X = random_algebra(rng, p, 3);
      Algebra Y = apply_isotopism(X, random_triple(rng, p, 3));
      ExistenceResult r = isotopism_exists(X, Y);
      REQUIRE(r.status == Tri::yes);
      CHECK(verify_isotopism(X, Y, *r.witness));
    }
  }
  SECTION("three-dimensional ring census pairs decide without error") {
    auto squares = pls_isotopism_classes(3);
    TestRng rng(103);
    for (int it = 0; it < 60; ++it) {
      const auto& L1 = squares[std::size_t(rng.below(int(squares.size())))];
      const auto& L2 = squares[std::size_t(rng.below(int(squares.size())))];
      ExistenceResult r = isotopism_exists(ring_of(L1, 2), ring_of(L2, 2));
      CHECK(r.status != Tri::undecided);
      if (r.witness) CHECK(verify_isotopism(ring_of(L1, 2), ring_of(L2, 2), *r.witness));
    }
  }
}

TEST_CASE("Lie algebra census") {
  SECTION("32 over F2, 123 over F3") {
    CHECK(enumerate_lie_algebras(3, 2).size() == 32);
    CHECK(enumerate_lie_algebras(3, 3).size() == 123);
  }
  SECTION("all tensors are alternating and satisfy Jacobi") {
    for (int p : {2, 3}) {
      PrimeField F(p);
      for (const Algebra& A : enumerate_lie_algebras(3, p)) {
        for (int i = 0; i < 3; ++i)
          for (int s = 0; s < 3; ++s) {
            CHECK(A.at(i, i, s) == 0);
            for (int j = 0; j < 3; ++j) CHECK(A.at(j, i, s) == F.neg(A.at(i, j, s)));
          }
        Vec e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
        Vec jac = vec_add(F, vec_add(F, product(A, e1, product(A, e2, e3)), product(A, e2, product(A, e3, e1))),
                          product(A, e3, product(A, e1, e2)));
        CHECK(vec_is_zero(jac));
      }
    }
  }
  SECTION("the abelian tensor is included") {
    auto all = enumerate_lie_algebras(3, 2);
    CHECK(std::count_if(all.begin(), all.end(), [](const Algebra& A) { return A.abelian(); }) == 1);
  }
  SECTION("unsupported sizes are rejected") {
    CHECK_THROWS_AS(enumerate_lie_algebras(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_lie_algebras(3, 5), std::invalid_argument);
  }
}

#include <catch2/catch_amalgamated.hpp>

#include "isoclass/ffield.hpp"
#include "test_util.hpp"

using isoclass::PrimeField;

TEST_CASE("non-prime moduli are rejected") {
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(9), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(0), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(-7), std::invalid_argument);
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(65521));
}

TEST_CASE("characteristic-2 addition") {
  PrimeField F(2);
  CHECK(F.add(1, 1) == 0);
}

TEST_CASE("inverse in F3") {
  PrimeField F(3);
  CHECK(F.inv(2) == 2);
}

TEST_CASE("inverse table in F5 matches a brute-force scan") {
  PrimeField F(5);
  // oracle: a*b == 1 scan
  for (int a = 1; a < 5; ++a) {
    int found = -1;
    for (int b = 1; b < 5; ++b)
      if (a * b % 5 == 1) found = b;
    CHECK(F.inv(a) == found);
  }
  std::map<int, int> expected = {{1, 1}, {2, 3}, {3, 2}, {4, 4}};
  for (auto [a, b] : expected) CHECK(F.inv(a) == b);
}

TEST_CASE("inv(0) is an error") {
  CHECK_THROWS_AS(PrimeField(7).inv(0), std::domain_error);
}

TEST_CASE("Fermat and ring axioms on random residues") {
  TestRng rng(42);
  for (int p : {2, 3, 5, 7, 65521}) {
    PrimeField F(p);
    for (int it = 0; it < 300; ++it) {
      int a = rng.below(p), b = rng.below(p), c = rng.below(p);
      if (a != 0) CHECK(F.pow(a, p - 1) == 1);
      CHECK(F.pow(a, p) == a);
      CHECK(F.add(a, b) == F.add(b, a));
      CHECK(F.mul(a, b) == F.mul(b, a));
      CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
    }
  }
}

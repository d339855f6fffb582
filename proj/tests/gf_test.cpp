#include <doctest.h>

#include <numeric>

#include "eqcount/gf.hpp"
#include "eqcount/selftest.hpp"

using eqcount::field_cache;
using eqcount::FieldTable;

TEST_CASE("canonical generators and moduli") {
  CHECK(field_cache(7, 1).generator == 3);
  CHECK(field_cache(3, 1).generator == 2);
  // x^4 + x + 1 is the first irreducible monic quartic over F_2.
  CHECK(field_cache(2, 4).modulus == std::vector<int>{1, 1, 0, 0, 1});
}

TEST_CASE("element encodings") {
  const FieldTable& F7 = field_cache(7, 1);
  CHECK(F7.element_from_int(5) == 5);
  CHECK(field_cache(2, 4).element_from_int(1) == 1);
  CHECK_THROWS_AS((void)F7.element_from_int(7), std::out_of_range);

  // In F_9 the encoding 3 has base-3 digits (0,1): the root of the modulus.
  // Evaluating the modulus at it must give zero.
  const FieldTable& F9 = field_cache(3, 2);
  int x = F9.element_from_int(3);
  int acc = 0;
  for (int i = 0; i <= F9.s; ++i)
    acc = F9.add(acc, F9.mul(F9.modulus[i], F9.pow_elem(x, i)));
  CHECK(acc == 0);
}

TEST_CASE("discrete logarithm") {
  const FieldTable& F7 = field_cache(7, 1);
  CHECK(F7.dlog(1) == 0);
  CHECK(F7.dlog(F7.generator) == 1);
  CHECK(F7.dlog(2) == 2);  // 3^2 = 9 = 2 (mod 7)
  CHECK_THROWS_AS((void)F7.dlog(0), std::domain_error);
}

TEST_CASE("quadratic character") {
  const FieldTable& F7 = field_cache(7, 1);
  CHECK(F7.eta(1) == 1);
  CHECK(F7.eta(0) == 0);
  CHECK(F7.eta(3) == -1);  // squares mod 7 are {1,2,4}
  CHECK_THROWS_AS((void)field_cache(2, 4).eta(1), std::domain_error);
}

TEST_CASE("power classes") {
  const FieldTable& F7 = field_cache(7, 1);
  CHECK(F7.is_kth_power(2, 1));
  CHECK(!F7.is_kth_power(2, 3));
  CHECK(F7.is_kth_power(6, 3));  // 3^3 = 27 = 6 (mod 7)
}

TEST_CASE("build rejects bad input") {
  CHECK_THROWS_AS((void)FieldTable::build(6, 1), std::invalid_argument);
  std::vector<int> reducible{1, 0, 0, 0, 1};  // x^4 + 1 = (x+1)^4 over F_2
  CHECK_THROWS_AS((void)FieldTable::build(2, 4, &reducible), std::invalid_argument);
}

TEST_CASE("field invariants, exhaustive over q <= 128") {
  for (auto [p, s] : eqcount::prime_powers_upto(128)) {
    const FieldTable& F = field_cache(p, s);
    REQUIRE(F.q <= 128);
    // log tables against polynomial arithmetic, and Fermat
    for (int x = 0; x < F.q; ++x) {
      for (int y = 0; y < F.q; ++y)
        REQUIRE(F.mul(x, y) == F.mul_poly(x, y));
      REQUIRE(F.pow_elem(x, F.q) == x);
    }
    // exactly (q-1)/t elements are t-th powers, for each t | q-1
    for (long long t = 1; t <= F.q - 1; ++t) {
      if ((F.q - 1) % t != 0) continue;
      long long powers = 0;
      for (int x = 1; x < F.q; ++x)
        if (F.is_kth_power(x, t)) ++powers;
      REQUIRE(powers == (F.q - 1) / t);
    }
  }
}

TEST_CASE("eta is multiplicative for odd q <= 121") {
  for (auto [p, s] : eqcount::prime_powers_upto(121)) {
    if (p == 2) continue;
    const FieldTable& F = field_cache(p, s);
    for (int x = 1; x < F.q; ++x)
      for (int y = 1; y < F.q; ++y)
        REQUIRE(F.eta(F.mul(x, y)) == F.eta(x) * F.eta(y));
  }
}

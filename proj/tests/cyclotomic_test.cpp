#include <doctest.h>

#include "eqcount/cyclotomic.hpp"
#include "eqcount/gf.hpp"

using eqcount::BigInt;
using eqcount::CyclotomicInt;

TEST_CASE("full orbit sums vanish") {
  for (int delta = 2; delta <= 12; ++delta) {
    CyclotomicInt z(delta);
    for (int i = 0; i < delta; ++i) z.accumulate(i, 1);
    CHECK(z.is_zero());
  }
}

TEST_CASE("1 + zeta_4^2 = 0") {
  CyclotomicInt z(4);
  z.accumulate(0, 1);
  z.accumulate(2, 1);
  CHECK(z.is_zero());
}

TEST_CASE("reduction modulo Phi_3") {
  // 1 + zeta + 2 zeta^2 = 1 + zeta + 2(-1 - zeta) = -1 - zeta
  CyclotomicInt z(3);
  z.accumulate(0, 1);
  z.accumulate(1, 1);
  z.accumulate(2, 2);
  CHECK(!z.is_zero());
  CHECK(z.reduced() == std::vector<BigInt>{-1, -1});
}

TEST_CASE("rational integer extraction") {
  CyclotomicInt five(6);
  five.accumulate(0, 5);
  REQUIRE(five.as_integer().has_value());
  CHECK(*five.as_integer() == 5);

  CyclotomicInt mixed(2);
  mixed.accumulate(0, 1);
  mixed.accumulate(1, 1);  // 1 + (-1)
  REQUIRE(mixed.as_integer().has_value());
  CHECK(*mixed.as_integer() == 0);

  CyclotomicInt irrational(4);
  irrational.accumulate(1, 1);  // i
  CHECK(!irrational.as_integer().has_value());
}

TEST_CASE("exact division") {
  CyclotomicInt z(5);
  for (int i = 0; i < 5; ++i) z.accumulate(i, 6 * (i + 1));
  CHECK(z.divisible_by(6));
  CyclotomicInt q = z.div_exact(6);
  CyclotomicInt expect(5);
  for (int i = 0; i < 5; ++i) expect.accumulate(i, i + 1);
  CHECK(q == expect);

  CyclotomicInt odd(5);
  odd.accumulate(1, 3);
  CHECK(!odd.divisible_by(2));
  CHECK_THROWS_AS((void)odd.div_exact(2), eqcount::IntegrityError);
}

TEST_CASE("root multiplication and conjugation") {
  CyclotomicInt z(7);
  z.accumulate(2, 3);
  z.accumulate(5, -1);
  CHECK(z.times_root(7) == z);
  CHECK(z.times_root(3).times_root(4) == z);
  CHECK(z.conjugate().conjugate() == z);

  CyclotomicInt byhand(7);  // conjugate sends zeta^i to zeta^{-i}
  byhand.accumulate(5, 3);
  byhand.accumulate(2, -1);
  CHECK(z.conjugate() == byhand);
}

#include <doctest.h>

#include <random>

#include "eqcount/counter.hpp"
#include "eqcount/selftest.hpp"
#include "test_support.hpp"

using namespace eqcount;
using testsupport::find_row;
using testsupport::make_spec;
using testsupport::row_spec;

TEST_CASE("validate rejects malformed specs") {
  const FieldTable& F = field_cache(7, 1);
  EquationSpec ok = make_spec(F, {1, 1}, 1, {1, 1}, {1, 1}, 2);
  CHECK_NOTHROW(validate(ok));

  EquationSpec bad = ok;
  bad.m = {1};
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = ok;
  bad.b = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = ok;
  bad.a = {1, 0};
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = ok;
  bad.k = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("derived parameters, q=16 experiment row") {
  EquationSpec spec = row_spec(find_row(1, 16));
  DerivedParams dp = derive_params(spec);
  CHECK(dp.k0 == 5);
  CHECK(dp.M == 120);
  CHECK(dp.dj == std::vector<long long>{1, 1, 3, 1, 5});
  CHECK(dp.D == 15);
  CHECK(dp.d == 5);
  CHECK(dp.t_odd == 5);
  CHECK(!dp.b_is_k0_power);

  ApplicabilityReport ap = classify(spec, dp);
  CHECK(ap.sorted_coprime);
  CHECK(ap.thm1);
  CHECK(!ap.thm3);
}

TEST_CASE("derived parameters, q=97 experiment row") {
  EquationSpec spec = row_spec(find_row(2, 97));
  DerivedParams dp = derive_params(spec);
  CHECK(dp.k0 == 4);
  CHECK(dp.d == 4);
  CHECK(dp.dj == std::vector<long long>{2, 2, 12});
  CHECK(classify(spec, dp).eq4_holds);
}

TEST_CASE("derived parameters, q=37 experiment row") {
  EquationSpec spec = row_spec(find_row(2, 37));
  DerivedParams dp = derive_params(spec);
  CHECK(dp.t_odd == 1);
  ApplicabilityReport ap = classify(spec, dp);
  CHECK(ap.sorted_coprime);
  CHECK(ap.eq4_holds);
  CHECK(ap.thm3);
}

TEST_CASE("the smallest quadratic-twist case") {
  const FieldTable& F7 = field_cache(7, 1);
  EquationSpec spec = make_spec(F7, {1, 1, 1}, 1, {1, 1, 1}, {1, 1, 1}, 2);
  DerivedParams dp = derive_params(spec);
  CHECK(dp.k0 == 1);
  CHECK(dp.M == 1);
  CHECK(dp.d == 1);
  ApplicabilityReport ap = classify(spec, dp);
  CHECK(ap.pzc);
  CHECK(ap.carlitz3);
}

TEST_CASE("norm-form hypothesis with ell") {
  const FieldTable& F16 = field_cache(2, 4);
  EquationSpec spec = make_spec(F16, {1, 1}, 2, {5, 5}, {1, 1}, 1);
  DerivedParams dp = derive_params(spec);
  CHECK(dp.D == 5);
  REQUIRE(dp.ell.has_value());
  CHECK(*dp.ell == 2);  // 5 | 2^2 + 1, and 5 does not divide 2^1 + 1
  CHECK(classify(spec, dp).uniform_norm);
}

TEST_CASE("the product-form gcd flag is strictly stronger than d = 1") {
  // d = 1 here, yet the product-form shift shares a factor 2 with q - 1, so
  // the q^{n-1} + (-1)^{n-1} count must NOT be claimed (it is 157, not 170;
  // see the counter tests).
  const FieldTable& F13 = field_cache(13, 1);
  EquationSpec spec = make_spec(F13, {6, 8, 4}, 7, {6, 1, 8}, {4, 1, 3}, 2);
  DerivedParams dp = derive_params(spec);
  CHECK(dp.d == 1);
  CHECK(!classify(spec, dp).pzc);
}

TEST_CASE("pzc flag forces d = 1, randomized") {
  std::mt19937_64 rng(7);
  for (auto [p, s] : prime_powers_upto(32)) {
    const FieldTable& F = field_cache(p, s);
    for (int i = 0; i < 50; ++i) {
      EquationSpec spec = random_spec(F, rng);
      DerivedParams dp = derive_params(spec);
      ApplicabilityReport ap = classify(spec, dp);
      if (ap.pzc) REQUIRE(dp.d == 1);
    }
  }
}

TEST_CASE("smallest_of_power_class") {
  const FieldTable& F7 = field_cache(7, 1);
  CHECK(smallest_of_power_class(F7, 3, true) == 1);
  CHECK(smallest_of_power_class(F7, 3, false) == 2);
  CHECK_THROWS_AS((void)smallest_of_power_class(F7, 1, false), std::invalid_argument);
}

TEST_CASE("2 ell divides s whenever ell exists with the norm hypothesis") {
  std::mt19937_64 rng(11);
  for (auto [p, s] : prime_powers_upto(128)) {
    const FieldTable& F = field_cache(p, s);
    for (int i = 0; i < 20; ++i) {
      EquationSpec spec = random_spec(F, rng);
      std::fill(spec.a.begin(), spec.a.end(), 1);
      DerivedParams dp = derive_params(spec);
      ApplicabilityReport ap = classify(spec, dp);  // asserts 2 ell | s inside
      if (ap.uniform_norm) REQUIRE(F.s % (2 * *dp.ell) == 0);
    }
  }
}

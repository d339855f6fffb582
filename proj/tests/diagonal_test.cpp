#include <doctest.h>

#include "eqcount/diagonal.hpp"
#include "test_support.hpp"

using namespace eqcount;
using testsupport::make_spec;

namespace {

EquationSpec diag_spec(const FieldTable& F, std::vector<long long> m,
                       std::vector<int> a = {}) {
  int n = static_cast<int>(m.size());
  if (a.empty()) a.assign(n, 1);
  // b/kj/k are irrelevant to the diagonal counts
  return make_spec(F, std::move(a), 1, std::move(m), std::vector<long long>(n, 1), 1);
}

}  // namespace

TEST_CASE("linear diagonal over F_3") {
  EquationSpec spec = diag_spec(field_cache(3, 1), {1, 1});
  DerivedParams dp = derive_params(spec);
  DiagonalCounts l3 = diag_lemma3(spec, dp);
  CHECK(l3.n0 == 3);
  CHECK(l3.nstar0 == 2);
  DiagonalCounts orc = diag_oracle(spec);
  CHECK(orc.n0 == 3);
  CHECK(orc.nstar0 == 2);
}

TEST_CASE("x^2 + y^2 = 0 over F_7 and F_5") {
  // -1 is a nonsquare mod 7: only the origin
  EquationSpec s7 = diag_spec(field_cache(7, 1), {2, 2});
  CHECK(diag_lemma3(s7, derive_params(s7)).n0 == 1);
  CHECK(diag_oracle(s7).n0 == 1);

  // -1 = 2^2 mod 5: two lines, 5 + 1*1*4 = 9 points in total
  EquationSpec s5 = diag_spec(field_cache(5, 1), {2, 2});
  DiagonalCounts c5 = diag_lemma3(s5, derive_params(s5));
  CHECK(c5.n0 == 9);
  CHECK(c5.nstar0 == 8);
  DiagonalCounts o5 = diag_oracle(s5);
  CHECK(o5.n0 == 9);
  CHECK(o5.nstar0 == 8);
}

TEST_CASE("x^4 + y^4 = 0 over F_9") {
  EquationSpec spec = diag_spec(field_cache(3, 2), {4, 4});
  DerivedParams dp = derive_params(spec);
  DiagonalCounts l4 = diag_lemma4(spec, dp);
  CHECK(l4.n0 == 33);
  CHECK(l4.nstar0 == 32);
  CHECK(diag_corollary2(spec, dp).n0 == 33);
  DiagonalCounts orc = diag_oracle(spec);
  CHECK(orc.n0 == 33);
  CHECK(orc.nstar0 == 32);
}

TEST_CASE("x^5 + y^5 = 0 over F_16") {
  EquationSpec spec = diag_spec(field_cache(2, 4), {5, 5});
  DerivedParams dp = derive_params(spec);
  DiagonalCounts l4 = diag_lemma4(spec, dp);
  CHECK(l4.n0 == 76);
  CHECK(l4.nstar0 == 75);
  DiagonalCounts c2 = diag_corollary2(spec, dp);
  CHECK(c2.n0 == 76);
  CHECK(c2.nstar0 == 75);
}

TEST_CASE("x^4 + y^4 + z^4 = 0 over F_9") {
  EquationSpec spec = diag_spec(field_cache(3, 2), {4, 4, 4});
  DerivedParams dp = derive_params(spec);
  CHECK(diag_corollary2(spec, dp).n0 == 225);
  CHECK(diag_oracle(spec).n0 == 225);
}

TEST_CASE("linear diagonal over F_7, three variables") {
  EquationSpec spec = diag_spec(field_cache(7, 1), {1, 1, 1});
  DiagonalCounts orc = diag_oracle(spec);
  CHECK(orc.n0 == 49);
  CHECK(orc.nstar0 == 30);
}

TEST_CASE("oracle is invariant under coefficient twisting by d_j-th powers") {
  const FieldTable& F = field_cache(13, 1);
  EquationSpec spec = diag_spec(F, {3, 4, 6}, {2, 5, 7});
  DiagonalCounts base = diag_oracle(spec);
  DerivedParams dp = derive_params(spec);
  for (int j = 0; j < spec.n; ++j) {
    EquationSpec twisted = spec;
    int c = F.exp_of(dp.dj[j]);  // a d_j-th power
    twisted.a[j] = F.mul(spec.a[j], F.pow_elem(c, 1));
    DiagonalCounts t = diag_oracle(twisted);
    CHECK(t.n0 == base.n0);
    CHECK(t.nstar0 == base.nstar0);
  }
}

TEST_CASE("diag_auto routes and cross-checks") {
  EquationSpec spec = diag_spec(field_cache(3, 2), {4, 4});
  DerivedParams dp = derive_params(spec);
  DiagonalCounts c = diag_auto(spec, dp);
  CHECK(c.n0 == 33);

  // no closed form: falls back to the oracle
  EquationSpec hard = diag_spec(field_cache(5, 2), {4, 4}, {2, 3});
  DerivedParams hdp = derive_params(hard);
  DiagonalCounts h = diag_auto(hard, hdp);
  CHECK(h.method == DiagMethod::oracle);
  CHECK(h.n0 == diag_oracle(hard).n0);
}

#include "eqcount/counter.hpp"

#include <stdexcept>

#include "eqcount/numth.hpp"
#include "eqcount/sqrtq.hpp"

namespace eqcount {
namespace {

int sign_pow(long long e) { return e % 2 == 0 ? 1 : -1; }

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

BigInt binom(int n, int r) {
  BigInt c = 1;
  for (int i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
  return c;
}

// Shared sigma-sum of Theorems 1 and 3: sum over j of
// eta((-1)^j) sigma_{2j}(etas) q^{j-1}.
BigInt eta_sigma_sum(const FieldTable& F, const std::vector<int>& etas, long long q,
                     int upper) {
  int eta_m1 = F.eta(F.neg_one());
  BigInt sum = 0;
  for (int j = 1; j <= upper; ++j) {
    int eta_j = (j % 2 == 0) ? 1 : eta_m1;
    sum += eta_j * sym_poly(2 * j, etas) * bigint_pow(BigInt(q), j - 1);
  }
  return sum;
}

std::vector<int> even_part_etas(const EquationSpec& spec, const DerivedParams& dp) {
  std::vector<int> etas;
  for (int i = dp.t_odd; i < spec.n; ++i)
    etas.push_back(spec.field->eta(spec.a[dp.sorted_perm[i]]));
  return etas;
}

// r-subset sum of I(d_{j_1},...,d_{j_r}) weighted by parity of r s/2l, for
// 2 <= r <= rmax, as sqrt(q)-scaled terms.
void add_subset_terms(SqrtScaled& acc, const std::vector<long long>& dj,
                      long long half_periods, int rmax, const BigInt& outer) {
  const int n = static_cast<int>(dj.size());
  for (int r = 2; r <= rmax; ++r) {
    long long subset_sum = 0;
    std::vector<int> idx(r);
    std::vector<long long> pick(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
      for (int i = 0; i < r; ++i) pick[i] = dj[idx[i]];
      subset_sum += i_count(pick);
      int i = r - 1;
      while (i >= 0 && idx[i] == n - r + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    acc.add_term(outer * sign_pow(r * half_periods) * subset_sum, r - 2);
  }
}

void add_subset_terms_equal_d(SqrtScaled& acc, int n, long long D,
                              long long half_periods, int rmax, const BigInt& outer) {
  for (int r = 2; r <= rmax; ++r) {
    BigInt ieq = bigint_pow(BigInt(D - 1), r) + sign_pow(r) * BigInt(D - 1);
    if (ieq % D != 0) throw IntegrityError("binomial I form not divisible by D");
    ieq /= D;
    acc.add_term(outer * sign_pow(r * half_periods) * binom(n, r) * ieq, r - 2);
  }
}

}  // namespace

BigInt theorem1(const EquationSpec& spec, const DerivedParams& dp) {
  const FieldTable& F = *spec.field;
  const long long q = F.q;
  const int n = spec.n, t = dp.t_odd;
  require(classify(spec, dp).thm1, "theorem 1 hypotheses fail");

  if (t == n)
    return bigint_pow(BigInt(q), n - 1) -
           (bigint_pow(BigInt(q - 1), n) + sign_pow(n) * BigInt(q - 1)) / q;

  std::vector<int> etas = even_part_etas(spec, dp);
  BigInt base = bigint_pow(BigInt(q), n - 1) -
                (bigint_pow(BigInt(q - 1), n) + sign_pow(n) * BigInt(q - 1)) / q;
  if (t == 0 && n % 2 == 0)
    return base - (q - 1) * eta_sigma_sum(F, etas, q, (n - 2) / 2);
  return base - sign_pow(n) * BigInt(q - 1) * eta_sigma_sum(F, etas, q, (n - t) / 2);
}

BigInt theorem2(const EquationSpec& spec, const DerivedParams& dp) {
  const FieldTable& F = *spec.field;
  const long long q = F.q;
  const int n = spec.n;
  ApplicabilityReport ap = classify(spec, dp);
  require(ap.thm2, "theorem 2 hypotheses fail");
  const long long half_periods = F.s / (2 * *dp.ell);

  SqrtScaled acc(F.p, F.s);
  acc.add_term(bigint_pow(BigInt(q), n - 1) -
                   (bigint_pow(BigInt(q - 1), n) + sign_pow(n) * BigInt(q - 1)) / q,
               0);
  add_subset_terms(acc, dp.dj, half_periods, n - 1,
                   BigInt(-sign_pow(n)) * (q - 1));
  BigInt result = acc.finalize();

  if (ap.all_dj_equal) {
    SqrtScaled spec_acc(F.p, F.s);
    spec_acc.add_term(bigint_pow(BigInt(q), n - 1) -
                          (bigint_pow(BigInt(q - 1), n) + sign_pow(n) * BigInt(q - 1)) / q,
                      0);
    add_subset_terms_equal_d(spec_acc, n, dp.dj[0], half_periods, n - 1,
                             BigInt(-sign_pow(n)) * (q - 1));
    if (spec_acc.finalize() != result)
      throw IntegrityError("theorem 2 specialization disagrees with general form");
  }
  return result;
}

BigInt theorem3(const EquationSpec& spec, const DerivedParams& dp) {
  const FieldTable& F = *spec.field;
  const long long q = F.q;
  const int n = spec.n, t = dp.t_odd;
  const long long k0 = dp.k0;
  require(classify(spec, dp).thm3, "theorem 3 hypotheses fail");

  if (t == n)
    return bigint_pow(BigInt(q), n - 1) - sign_pow(n) +
           (k0 - 1) * (bigint_pow(BigInt(q - 1), n) - sign_pow(n)) / q;

  std::vector<int> etas = even_part_etas(spec, dp);
  if (t == 0 && n % 2 == 0) {
    int arg = (n / 2) % 2 == 1 ? F.neg_one() : 1;
    for (int aj : spec.a) arg = F.mul(arg, aj);
    return bigint_pow(BigInt(q), n - 1) - 1 +
           (k0 - 1) * (bigint_pow(BigInt(q - 1), n) - 1) / q -
           k0 * F.eta(arg) * bigint_pow(BigInt(q), (n - 2) / 2) -
           (k0 + q - 1) * eta_sigma_sum(F, etas, q, (n - 2) / 2);
  }
  return bigint_pow(BigInt(q), n - 1) - sign_pow(n) +
         (k0 - 1) * (bigint_pow(BigInt(q - 1), n) - sign_pow(n)) / q -
         sign_pow(n) * BigInt(k0 + q - 1) * eta_sigma_sum(F, etas, q, (n - t) / 2);
}

BigInt theorem4(const EquationSpec& spec, const DerivedParams& dp) {
  const FieldTable& F = *spec.field;
  const long long q = F.q;
  const int n = spec.n;
  const long long k0 = dp.k0;
  ApplicabilityReport ap = classify(spec, dp);
  require(ap.thm4, "theorem 4 hypotheses fail");
  const long long half_periods = F.s / (2 * *dp.ell);

  auto evaluate = [&](bool equal_d_path) {
    SqrtScaled acc(F.p, F.s);
    acc.add_term(bigint_pow(BigInt(q), n - 1) - sign_pow(n) +
                     (k0 - 1) * (bigint_pow(BigInt(q - 1), n) - sign_pow(n)) / q,
                 0);
    if (equal_d_path) {
      long long D = dp.dj[0];
      BigInt ieq = bigint_pow(BigInt(D - 1), n) + sign_pow(n) * BigInt(D - 1);
      if (ieq % D != 0) throw IntegrityError("binomial I form not divisible by D");
      acc.add_term(BigInt(-sign_pow((half_periods - 1) * n)) * k0 * (ieq / D), n - 2);
      add_subset_terms_equal_d(acc, n, D, half_periods, n - 1,
                               BigInt(-sign_pow(n)) * (k0 + q - 1));
    } else {
      acc.add_term(BigInt(-sign_pow((half_periods - 1) * n)) * k0 * i_count(dp.dj),
                   n - 2);
      add_subset_terms(acc, dp.dj, half_periods, n - 1,
                       BigInt(-sign_pow(n)) * (k0 + q - 1));
    }
    return acc.finalize();
  };

  BigInt result = evaluate(false);
  if (ap.all_dj_equal && evaluate(true) != result)
    throw IntegrityError("theorem 4 specialization disagrees with general form");
  return result;
}

BigInt pzc(const EquationSpec& spec, const DerivedParams& dp) {
  require(classify(spec, dp).pzc, "PZC gcd condition fails");
  return bigint_pow(BigInt(spec.field->q), spec.n - 1) + sign_pow(spec.n - 1);
}

BigInt carlitz_n4(const EquationSpec& spec) {
  const FieldTable& F = *spec.field;
  require(spec.n == 4 && F.p > 2 && spec.k == 2, "carlitz quartic shape required");
  for (int j = 0; j < 4; ++j)
    require(spec.m[j] == 1 && spec.kj[j] == 1, "carlitz quartic shape required");
  int arg = spec.b;
  for (int aj : spec.a) arg = F.mul(arg, aj);
  return bigint_pow(BigInt(F.q), 3) - 1 - F.eta(arg) * BigInt(F.q);
}

BigInt oracle_count(const EquationSpec& spec) {
  WTable W = WTable::build(spec);
  StarCounts stars = count_from_w(spec, W);
  DiagonalCounts diag = diag_oracle(spec);
  if (stars.nstar0 != diag.nstar0)
    throw IntegrityError("W-table nstar0 disagrees with diagonal oracle");
  return stars.nstar + diag.n0 - diag.nstar0;
}

BigInt naive_count(const EquationSpec& spec) {
  validate(spec);
  const FieldTable& F = *spec.field;
  const long long q = F.q;
  double size = 1;
  for (int j = 0; j < spec.n; ++j) size *= static_cast<double>(q);
  if (size > 1e7) throw std::invalid_argument("naive_count: q^n too large");

  // Per-variable power tables; RHS log accumulates only over nonzero coords.
  std::vector<std::vector<int>> powm(spec.n, std::vector<int>(q));
  std::vector<std::vector<long long>> wlog(spec.n, std::vector<long long>(q, 0));
  for (int j = 0; j < spec.n; ++j)
    for (int x = 0; x < q; ++x) {
      powm[j][x] = F.mul(spec.a[j], F.pow_elem(x, spec.m[j]));
      if (x != 0) wlog[j][x] = spec.kj[j] * F.dlog(x) % (q - 1);
    }

  BigInt count = 0;
  std::vector<int> xs(spec.n, 0);
  while (true) {
    int sum = 0;
    bool any_zero = false;
    long long tlog = 0;
    for (int j = 0; j < spec.n; ++j) {
      sum = F.add(sum, powm[j][xs[j]]);
      if (xs[j] == 0)
        any_zero = true;
      else
        tlog += wlog[j][xs[j]];
    }
    int lhs = F.pow_elem(sum, spec.k);
    int rhs = any_zero ? 0 : F.mul(spec.b, F.exp_of(tlog));
    if (lhs == rhs) ++count;
    int j = 0;
    while (j < spec.n && ++xs[j] == q) xs[j++] = 0;
    if (j == spec.n) break;
  }
  return count;
}

CountReport dispatch(const EquationSpec& spec, bool run_oracle) {
  CountReport report;
  report.spec = spec;
  report.dp = derive_params(spec);
  report.ap = classify(spec, report.dp);

  struct Route {
    const char* name;
    BigInt value;
  };
  std::vector<Route> routes;
  if (report.ap.thm1) routes.push_back({"theorem1", theorem1(spec, report.dp)});
  if (report.ap.thm2) routes.push_back({"theorem2", theorem2(spec, report.dp)});
  if (report.ap.thm3) routes.push_back({"theorem3", theorem3(spec, report.dp)});
  if (report.ap.thm4) routes.push_back({"theorem4", theorem4(spec, report.dp)});
  if (report.ap.pzc) routes.push_back({"pzc", pzc(spec, report.dp)});
  if (report.ap.carlitz3) routes.push_back({"carlitz3", pzc(spec, report.dp)});
  if (report.ap.carlitz4) routes.push_back({"carlitz4", carlitz_n4(spec)});

  if (!routes.empty()) {
    for (const Route& r : routes)
      if (r.value != routes.front().value)
        throw IntegrityError("closed-form routes disagree");
    report.closed_form_value = routes.front().value;
    for (size_t i = 0; i < routes.size(); ++i) {
      if (i) report.closed_form_method += ",";
      report.closed_form_method += routes[i].name;
    }
  }

  if (run_oracle) {
    report.oracle_value = oracle_count(spec);
    if (report.closed_form_value)
      report.agreement = (*report.closed_form_value == *report.oracle_value);
  }
  return report;
}

}  // namespace eqcount

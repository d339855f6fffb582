#include "eqcount/eqmodel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eqcount {

void validate(const EquationSpec& spec) {
  if (spec.field == nullptr) throw std::invalid_argument("missing field");
  if (spec.n < 1) throw std::invalid_argument("n must be at least 1");
  if (static_cast<int>(spec.a.size()) != spec.n)
    throw std::invalid_argument("a has wrong length");
  if (static_cast<int>(spec.m.size()) != spec.n)
    throw std::invalid_argument("m has wrong length");
  if (static_cast<int>(spec.kj.size()) != spec.n)
    throw std::invalid_argument("kj has wrong length");
  for (int aj : spec.a)
    if (aj <= 0 || aj >= spec.field->q)
      throw std::invalid_argument("coefficient a_j must be a nonzero element");
  if (spec.b <= 0 || spec.b >= spec.field->q)
    throw std::invalid_argument("b must be a nonzero element");
  for (long long mj : spec.m)
    if (mj < 1) throw std::invalid_argument("m_j must be positive");
  for (long long kjj : spec.kj)
    if (kjj < 1) throw std::invalid_argument("k_j must be positive");
  if (spec.k < 1) throw std::invalid_argument("k must be positive");
}

DerivedParams derive_params(const EquationSpec& spec) {
  validate(spec);
  const FieldTable& F = *spec.field;
  const long long qm1 = F.q - 1;

  DerivedParams dp;
  dp.k0 = spec.k;
  for (long long kjj : spec.kj) dp.k0 = std::gcd(dp.k0, kjj);
  dp.k0 = std::gcd(dp.k0, qm1);

  dp.M = 1;
  for (long long mj : spec.m) dp.M = dp.M / gcd(dp.M, BigInt(mj)) * mj;

  dp.dj.resize(spec.n);
  dp.D = 1;
  for (int j = 0; j < spec.n; ++j) {
    dp.dj[j] = std::gcd(spec.m[j], qm1);
    dp.D = std::lcm(dp.D, dp.dj[j]);
  }

  BigInt shift = 0;
  for (int j = 0; j < spec.n; ++j) shift += spec.kj[j] * (dp.M / spec.m[j]);
  shift -= spec.k * dp.M;
  BigInt g = abs(shift);
  for (int j = 0; j < spec.n; ++j)
    g = gcd(g, BigInt(spec.kj[j] * (qm1 / dp.dj[j])));
  g = gcd(g, BigInt(qm1));
  dp.d = g.convert_to<long long>();

  dp.sorted_perm.resize(spec.n);
  std::iota(dp.sorted_perm.begin(), dp.sorted_perm.end(), 0);
  std::stable_sort(dp.sorted_perm.begin(), dp.sorted_perm.end(),
                   [&](int i, int j) { return (dp.dj[i] % 2) > (dp.dj[j] % 2); });
  dp.t_odd = static_cast<int>(
      std::count_if(dp.dj.begin(), dp.dj.end(), [](long long d) { return d % 2 == 1; }));

  for (int l = 1; l <= F.s; ++l) {
    long long pl = 1;
    for (int i = 0; i < l; ++i) pl = pl * (F.p % dp.D) % dp.D;
    if ((pl + 1) % dp.D == 0) {
      dp.ell = l;
      break;
    }
  }

  dp.b_is_k0_power = F.is_kth_power(spec.b, dp.k0);
  return dp;
}

ApplicabilityReport classify(const EquationSpec& spec, const DerivedParams& dp) {
  const FieldTable& F = *spec.field;
  ApplicabilityReport ap;

  // The closed forms are all stated for n >= 2; single-variable instances are
  // served by the oracle only.
  if (spec.n < 2) {
    ap.reasons.push_back("n < 2: oracle only");
    return ap;
  }

  // Theorem 1/3 structure: after the odd-first sort, halve the even d_j and
  // require the resulting multiset pairwise coprime.
  std::vector<long long> halves(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    long long d = dp.dj[dp.sorted_perm[i]];
    halves[i] = (i < dp.t_odd) ? d : d / 2;
  }
  ap.sorted_coprime = true;
  for (int i = 0; i < spec.n && ap.sorted_coprime; ++i)
    for (int j = i + 1; j < spec.n; ++j)
      if (std::gcd(halves[i], halves[j]) != 1) {
        ap.sorted_coprime = false;
        ap.reasons.push_back("sorted d_j halves are not pairwise coprime");
        break;
      }

  bool all_one = std::all_of(spec.a.begin(), spec.a.end(), [](int x) { return x == 1; });
  ap.uniform_norm = true;
  if (!all_one) {
    ap.uniform_norm = false;
    ap.reasons.push_back("coefficients a_j are not all 1");
  }
  if (dp.D <= 2) {
    ap.uniform_norm = false;
    ap.reasons.push_back("D <= 2");
  }
  if (!dp.ell.has_value()) {
    ap.uniform_norm = false;
    if (all_one && dp.D > 2)
      ap.reasons.push_back("no l with D | p^l + 1");
  }
  if (ap.uniform_norm && F.s % (2 * *dp.ell) != 0)
    throw IntegrityError("2*ell does not divide s");

  ap.eq4_holds = (dp.d == dp.k0);
  ap.all_dj_equal =
      std::all_of(dp.dj.begin(), dp.dj.end(), [&](long long d) { return d == dp.dj[0]; });

  ap.thm1 = ap.sorted_coprime && !dp.b_is_k0_power;
  ap.thm2 = ap.uniform_norm && !dp.b_is_k0_power;
  ap.thm3 = ap.sorted_coprime && dp.b_is_k0_power && ap.eq4_holds;
  ap.thm4 = ap.uniform_norm && dp.b_is_k0_power && ap.eq4_holds;
  if (dp.b_is_k0_power && !ap.eq4_holds &&
      (ap.sorted_coprime || ap.uniform_norm))
    ap.reasons.push_back("b is a k0th power but d != k0");

  // The [PZC] gcd condition, stated with the product of the m_j. It implies
  // d = 1 but is strictly stronger: d = 1 alone does not give the formula.
  BigInt prod_m = 1;
  for (long long mj : spec.m) prod_m *= mj;
  BigInt pzc_shift = 0;
  for (int j = 0; j < spec.n; ++j) pzc_shift += spec.kj[j] * (prod_m / spec.m[j]);
  pzc_shift -= spec.k * prod_m;
  ap.pzc = gcd(abs(pzc_shift), BigInt(F.q - 1)) == 1;
  if (ap.pzc && dp.d != 1)
    throw IntegrityError("PZC gcd condition holds but d != 1");

  bool carlitz_shape =
      std::all_of(spec.m.begin(), spec.m.end(), [](long long x) { return x == 1; }) &&
      std::all_of(spec.kj.begin(), spec.kj.end(), [](long long x) { return x == 1; }) &&
      spec.k == 2 && F.p > 2;
  ap.carlitz3 = carlitz_shape && spec.n == 3;
  ap.carlitz4 = carlitz_shape && spec.n == 4;

  return ap;
}

int smallest_of_power_class(const FieldTable& F, long long t, bool want_power) {
  for (int x = 1; x < F.q; ++x)
    if (F.is_kth_power(x, t) == want_power) return x;
  throw std::invalid_argument(want_power ? "power class is empty"
                                         : "every element is a t-th power");
}

std::string describe(const EquationSpec& spec) {
  auto seq = [](const auto& xs) {
    std::string s = "(";
    for (size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(xs[i]);
    }
    return s + ")";
  };
  std::string s = "q=" + std::to_string(spec.field->q) + " n=" + std::to_string(spec.n);
  s += " a=" + seq(spec.a) + " b=" + std::to_string(spec.b);
  s += " m=" + seq(spec.m) + " kj=" + seq(spec.kj) + " k=" + std::to_string(spec.k);
  return s;
}

}  // namespace eqcount

#include "eqcount/diagonal.hpp"

#include <stdexcept>

#include "eqcount/numth.hpp"
#include "eqcount/sqrtq.hpp"

namespace eqcount {
namespace {

int sign_pow(long long e) { return e % 2 == 0 ? 1 : -1; }

BigInt nstar0_base(long long q, int n) {
  BigInt v = bigint_pow(BigInt(q - 1), n) + sign_pow(n) * BigInt(q - 1);
  if (v % q != 0) throw IntegrityError("nstar0 base term not divisible by q");
  return v / q;
}

// eta values of the coefficients sitting at even-d_j positions, in the stable
// odd-first order the theorems assume.
std::vector<int> even_part_etas(const EquationSpec& spec, const DerivedParams& dp) {
  std::vector<int> etas;
  for (int i = dp.t_odd; i < spec.n; ++i)
    etas.push_back(spec.field->eta(spec.a[dp.sorted_perm[i]]));
  return etas;
}

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

std::string_view to_string(DiagMethod m) {
  switch (m) {
    case DiagMethod::lemma3: return "lemma3";
    case DiagMethod::lemma4: return "lemma4";
    case DiagMethod::corollary2: return "corollary2";
    case DiagMethod::oracle: return "oracle";
  }
  return "?";
}

DiagonalCounts diag_lemma3(const EquationSpec& spec, const DerivedParams& dp) {
  const FieldTable& F = *spec.field;
  const long long q = F.q;
  const int n = spec.n, t = dp.t_odd;
  {
    ApplicabilityReport ap = classify(spec, dp);
    require(ap.sorted_coprime, "odd/even coprimality hypothesis fails");
  }
  require(F.p > 2 || t == n, "eta branch needs odd characteristic");

  DiagonalCounts out;
  out.method = DiagMethod::lemma3;

  out.n0 = bigint_pow(BigInt(q), n - 1);
  if (t == 0 && n % 2 == 0) {
    int arg = (n / 2) % 2 == 1 ? F.neg_one() : 1;
    for (int aj : spec.a) arg = F.mul(arg, aj);
    out.n0 += F.eta(arg) * bigint_pow(BigInt(q), (n - 2) / 2) * (q - 1);
  }

  out.nstar0 = nstar0_base(q, n);
  if (t < n) {
    std::vector<int> etas = even_part_etas(spec, dp);
    int eta_m1 = F.eta(F.neg_one());
    BigInt sum = 0;
    for (int j = 1; j <= (n - t) / 2; ++j) {
      int eta_j = (j % 2 == 0) ? 1 : eta_m1;
      sum += eta_j * sym_poly(2 * j, etas) * bigint_pow(BigInt(q), j - 1);
    }
    out.nstar0 += sign_pow(n) * BigInt(q - 1) * sum;
  }
  return out;
}

DiagonalCounts diag_lemma4(const EquationSpec& spec, const DerivedParams& dp) {
  const FieldTable& F = *spec.field;
  const long long q = F.q;
  const int n = spec.n;
  {
    ApplicabilityReport ap = classify(spec, dp);
    require(ap.uniform_norm, "lemma-4 hypotheses fail (a_j = 1, D > 2, D | p^l + 1)");
  }
  const int ell = *dp.ell;
  const long long half_periods = F.s / (2 * ell);

  DiagonalCounts out;
  out.method = DiagMethod::lemma4;

  SqrtScaled n0_acc(F.p, F.s);
  n0_acc.add_term(bigint_pow(BigInt(q), n - 1), 0);
  n0_acc.add_term(BigInt(sign_pow((half_periods - 1) * n)) * (q - 1) *
                      i_count(dp.dj),
                  n - 2);
  out.n0 = n0_acc.finalize();

  SqrtScaled star_acc(F.p, F.s);
  star_acc.add_term(nstar0_base(q, n), 0);
  for (int r = 2; r <= n; ++r) {
    long long subset_sum = 0;
    std::vector<long long> pick(r);
    std::vector<int> idx(r);
    // iterate r-subsets of indices
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
      for (int i = 0; i < r; ++i) pick[i] = dp.dj[idx[i]];
      subset_sum += i_count(pick);
      int i = r - 1;
      while (i >= 0 && idx[i] == n - r + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    star_acc.add_term(BigInt(sign_pow(n)) * (q - 1) *
                          sign_pow(r * half_periods) * subset_sum,
                      r - 2);
  }
  out.nstar0 = star_acc.finalize();
  return out;
}

DiagonalCounts diag_corollary2(const EquationSpec& spec, const DerivedParams& dp) {
  const FieldTable& F = *spec.field;
  const long long q = F.q;
  const int n = spec.n;
  {
    ApplicabilityReport ap = classify(spec, dp);
    require(ap.uniform_norm && ap.all_dj_equal,
            "corollary-2 hypotheses fail (lemma 4 plus equal d_j)");
  }
  const int ell = *dp.ell;
  const long long half_periods = F.s / (2 * ell);
  const long long D = dp.dj[0];

  auto i_equal = [&](int r) -> BigInt {
    BigInt v = bigint_pow(BigInt(D - 1), r) + sign_pow(r) * BigInt(D - 1);
    if (v % D != 0) throw IntegrityError("binomial I form not divisible by D");
    return v / D;
  };
  auto binom = [&](int nn, int rr) {
    BigInt c = 1;
    for (int i = 0; i < rr; ++i) c = c * (nn - i) / (i + 1);
    return c;
  };

  DiagonalCounts out;
  out.method = DiagMethod::corollary2;

  SqrtScaled n0_acc(F.p, F.s);
  n0_acc.add_term(bigint_pow(BigInt(q), n - 1), 0);
  n0_acc.add_term(BigInt(sign_pow((half_periods - 1) * n)) * (q - 1) * i_equal(n),
                  n - 2);
  out.n0 = n0_acc.finalize();

  SqrtScaled star_acc(F.p, F.s);
  star_acc.add_term(nstar0_base(q, n), 0);
  for (int r = 2; r <= n; ++r)
    star_acc.add_term(BigInt(sign_pow(n)) * (q - 1) * sign_pow(r * half_periods) *
                          binom(n, r) * i_equal(r),
                      r - 2);
  out.nstar0 = star_acc.finalize();
  return out;
}

DiagonalCounts diag_oracle(const EquationSpec& spec) {
  validate(spec);
  const FieldTable& F = *spec.field;
  const long long q = F.q;

  // Value distribution of a_j x^{m_j}; the x = 0 contribution is kept separate
  // so one convolution pass serves both the full-range and nonzero counts.
  DiagonalCounts out;
  out.method = DiagMethod::oracle;
  std::vector<BigInt> full{BigInt(1)}, star{BigInt(1)};
  full.resize(q);
  star.resize(q);
  for (int j = 0; j < spec.n; ++j) {
    std::vector<long long> cnt(q, 0);
    for (int x = 1; x < q; ++x) cnt[F.mul(spec.a[j], F.pow_elem(x, spec.m[j]))]++;
    auto convolve = [&](std::vector<BigInt>& dist, bool with_zero) {
      std::vector<BigInt> next(q);
      for (int sv = 0; sv < q; ++sv) {
        if (dist[sv] == 0) continue;
        for (int v = 0; v < q; ++v)
          if (cnt[v] != 0) next[F.add(sv, v)] += dist[sv] * cnt[v];
        if (with_zero) next[sv] += dist[sv];  // x_j = 0 maps to value 0
      }
      dist = std::move(next);
    };
    convolve(full, true);
    convolve(star, false);
  }
  out.n0 = full[0];
  out.nstar0 = star[0];
  return out;
}

DiagonalCounts diag_auto(const EquationSpec& spec, const DerivedParams& dp) {
  ApplicabilityReport ap = classify(spec, dp);
  bool lemma3_ok = ap.sorted_coprime && (spec.field->p > 2 || dp.t_odd == spec.n);
  if (lemma3_ok) {
    DiagonalCounts c3 = diag_lemma3(spec, dp);
    if (ap.uniform_norm) {
      DiagonalCounts c4 = diag_lemma4(spec, dp);
      if (c3.n0 != c4.n0 || c3.nstar0 != c4.nstar0)
        throw IntegrityError("lemma 3 and lemma 4 disagree");
    }
    return c3;
  }
  if (ap.uniform_norm) {
    DiagonalCounts c4 = diag_lemma4(spec, dp);
    if (ap.all_dj_equal) {
      DiagonalCounts c2 = diag_corollary2(spec, dp);
      if (c2.n0 != c4.n0 || c2.nstar0 != c4.nstar0)
        throw IntegrityError("lemma 4 and corollary 2 disagree");
    }
    return c4;
  }
  return diag_oracle(spec);
}

}  // namespace eqcount

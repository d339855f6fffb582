#include "eqcount/charsum.hpp"

#include <numeric>

#include "eqcount/sqrtq.hpp"

namespace eqcount {

Character make_character(const FieldTable& F, long long r) {
  long long qm1 = F.q - 1;
  r %= qm1;
  if (r < 0) r += qm1;
  return Character{r, qm1 / std::gcd(r, qm1)};
}

Character conjugate(const FieldTable& F, const Character& psi) {
  return make_character(F, (F.q - 1) - psi.r);
}

WTable WTable::build(const EquationSpec& spec) {
  validate(spec);
  const FieldTable& F = *spec.field;
  const long long q = F.q, qm1 = q - 1;

  WTable W;
  W.q = q;
  W.w_.assign(q * qm1, BigInt(0));
  W.w_[0] = 1;  // unit mass at (s, t) = (0, 0)

  std::vector<BigInt> next(q * qm1);
  for (int j = 0; j < spec.n; ++j) {
    // per-variable contribution (value shift, log-weight shift) for x in F_q^*
    std::vector<std::pair<int, long long>> shifts(qm1);
    for (int x = 1; x < q; ++x)
      shifts[x - 1] = {F.mul(spec.a[j], F.pow_elem(x, spec.m[j])),
                       spec.kj[j] * F.dlog(x) % qm1};
    for (auto& e : next) e = 0;
    for (long long s = 0; s < q; ++s) {
      for (long long t = 0; t < qm1; ++t) {
        const BigInt& mass = W.w_[s * qm1 + t];
        if (mass == 0) continue;
        for (auto [v, wgt] : shifts) {
          long long s2 = F.add(static_cast<int>(s), v);
          long long t2 = t + wgt;
          if (t2 >= qm1) t2 -= qm1;
          next[s2 * qm1 + t2] += mass;
        }
      }
    }
    W.w_.swap(next);
  }
  return W;
}

BigInt WTable::total_mass() const {
  BigInt m = 0;
  for (const BigInt& e : w_) m += e;
  return m;
}

CyclotomicInt t_sum(const EquationSpec& spec, const WTable& W, const Character& psi) {
  const FieldTable& F = *spec.field;
  const long long q = F.q, qm1 = q - 1;
  CyclotomicInt acc(static_cast<int>(qm1));
  for (long long s = 1; s < q; ++s) {
    long long base = psi.r % qm1 * ((qm1 - spec.k % qm1 * F.dlog(static_cast<int>(s)) % qm1) % qm1) % qm1;
    for (long long t = 0; t < qm1; ++t) {
      const BigInt& mass = W.at(s, t);
      if (mass == 0) continue;
      acc.accumulate(base + psi.r * t, mass);
    }
  }
  return acc.div_exact(BigInt(qm1));
}

StarCounts count_from_w(const EquationSpec& spec, const WTable& W) {
  const FieldTable& F = *spec.field;
  const long long q = F.q, qm1 = q - 1;
  StarCounts out;
  out.nstar = 0;
  out.nstar0 = 0;
  for (long long t = 0; t < qm1; ++t) out.nstar0 += W.at(0, t);
  for (long long s = 1; s < q; ++s) {
    long long t = ((spec.k % qm1) * F.dlog(static_cast<int>(s)) - F.dlog(spec.b)) % qm1;
    if (t < 0) t += qm1;
    out.nstar += W.at(s, t);
  }
  return out;
}

BigInt assemble(const EquationSpec& spec, const DerivedParams& dp, const WTable& W,
                const DiagonalCounts& diag) {
  const FieldTable& F = *spec.field;
  const long long q = F.q, qm1 = q - 1;

  if (!dp.b_is_k0_power) return diag.n0 - diag.nstar0;

  BigInt total = dp.k0 * bigint_pow(BigInt(qm1), spec.n - 1) + diag.n0;
  BigInt scaled = (dp.k0 + qm1) * diag.nstar0;
  if (scaled % qm1 != 0)
    throw IntegrityError("N*(0) coefficient not divisible by q-1");
  total -= scaled / qm1;

  // Characters of order dividing d but not k0.
  CyclotomicInt char_sum(static_cast<int>(qm1));
  for (long long i = 1; i < dp.d; ++i) {
    long long r = qm1 / dp.d * i;
    if (r * dp.k0 % qm1 == 0) continue;  // psi^{k0} trivial
    Character psi = make_character(F, r);
    char_sum += t_sum(spec, W, psi).times_root(r * F.dlog(spec.b));
  }
  auto value = char_sum.as_integer();
  if (!value)
    throw IntegrityError("character sum is not a rational integer");
  return total + *value;
}

}  // namespace eqcount

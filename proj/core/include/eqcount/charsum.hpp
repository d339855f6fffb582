#pragma once

#include <vector>

#include "eqcount/bigint.hpp"
#include "eqcount/cyclotomic.hpp"
#include "eqcount/diagonal.hpp"
#include "eqcount/eqmodel.hpp"

namespace eqcount {

/// Multiplicative character psi(g^t) = zeta_{q-1}^{r t}.
struct Character {
  long long r = 0;
  long long order = 1;  // (q-1)/gcd(r, q-1)

  bool trivial() const { return r == 0; }
};

Character make_character(const FieldTable& F, long long r);
Character conjugate(const FieldTable& F, const Character& psi);

/// Joint distribution of (diagonal sum value s, weighted log-sum t) over
/// (F_q^*)^n: entry (s, t) counts tuples with sum a_j x_j^{m_j} = s and
/// sum k_j dlog(x_j) = t (mod q-1). Sufficient statistic for N_q^*, N_q^*(0)
/// and every T(psi). Immutable after build; total mass is (q-1)^n.
class WTable {
 public:
  static WTable build(const EquationSpec& spec);

  long long q = 0;

  const BigInt& at(long long s, long long t) const { return w_[s * (q - 1) + t]; }

  BigInt total_mass() const;

 private:
  std::vector<BigInt> w_;
};

/// Exact T(psi) as an element of Z[zeta_{q-1}]; the defining 1/(q-1) factor is
/// divided out exactly (failure to divide is an integrity bug).
CyclotomicInt t_sum(const EquationSpec& spec, const WTable& W, const Character& psi);

struct StarCounts {
  BigInt nstar;   // solutions of the full equation in (F_q^*)^n
  BigInt nstar0;  // diagonal solutions in (F_q^*)^n
};

StarCounts count_from_w(const EquationSpec& spec, const WTable& W);

/// N_q assembled from the b-class split: the plain difference when b is not a
/// k0th power, the character-sum identity over psi^d = eps otherwise. The
/// final value is asserted to be a rational integer.
BigInt assemble(const EquationSpec& spec, const DerivedParams& dp, const WTable& W,
                const DiagonalCounts& diag);

}  // namespace eqcount

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqcount/bigint.hpp"
#include "eqcount/gf.hpp"

namespace eqcount {

/// One instance of (a_1 x_1^{m_1} + ... + a_n x_n^{m_n})^k = b x_1^{k_1}...x_n^{k_n}.
struct EquationSpec {
  const FieldTable* field = nullptr;
  int n = 0;
  std::vector<int> a;        // element encodings, all nonzero
  int b = 0;                 // nonzero element encoding
  std::vector<long long> m;  // m_j >= 1
  std::vector<long long> kj; // k_j >= 1
  long long k = 1;
};

/// Throws std::invalid_argument on any contract violation.
void validate(const EquationSpec& spec);

struct DerivedParams {
  long long k0 = 0;
  BigInt M;                       // lcm of the m_j, not bounded by q
  std::vector<long long> dj;      // gcd(m_j, q-1)
  long long D = 0;                // lcm of the d_j
  long long d = 0;
  int t_odd = 0;                  // number of odd d_j
  std::vector<int> sorted_perm;   // stable permutation, odd d_j first
  std::optional<int> ell;         // least l with D | p^l + 1, searched l <= s
  bool b_is_k0_power = false;
};

DerivedParams derive_params(const EquationSpec& spec);

struct ApplicabilityReport {
  // Structural hypotheses, independent of b.
  bool sorted_coprime = false;   // odd/even split with pairwise coprime halves
  bool uniform_norm = false;     // all a_j = 1, D > 2, ell present
  bool eq4_holds = false;        // d == k0
  bool all_dj_equal = false;

  // Theorem routing (structure + b-class + eq4 where needed).
  bool thm1 = false, thm2 = false, thm3 = false, thm4 = false;
  bool pzc = false;
  bool carlitz3 = false, carlitz4 = false;

  std::vector<std::string> reasons;  // hypothesis-failure notes
};

ApplicabilityReport classify(const EquationSpec& spec, const DerivedParams& dp);

/// Smallest-encoding element of F_q^* that is (want_power) or is not
/// (!want_power) a t-th power. Throws when the requested class is empty.
int smallest_of_power_class(const FieldTable& F, long long t, bool want_power);

/// One-line rendering of a spec, for diagnostics and counterexamples.
std::string describe(const EquationSpec& spec);

}  // namespace eqcount

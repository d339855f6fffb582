#pragma once

#include <string_view>

#include "eqcount/bigint.hpp"
#include "eqcount/eqmodel.hpp"

namespace eqcount {

enum class DiagMethod { lemma3, lemma4, corollary2, oracle };

std::string_view to_string(DiagMethod m);

/// Solution counts for the diagonal equation a_1 x_1^{m_1}+...+a_n x_n^{m_n} = 0:
/// n0 over F_q^n, nstar0 over (F_q^*)^n.
struct DiagonalCounts {
  BigInt n0;
  BigInt nstar0;
  DiagMethod method;
};

/// Closed form under the odd/even pairwise-coprime hypothesis.
DiagonalCounts diag_lemma3(const EquationSpec& spec, const DerivedParams& dp);

/// Closed form for a_j = 1, D > 2, D | p^ell + 1.
DiagonalCounts diag_lemma4(const EquationSpec& spec, const DerivedParams& dp);

/// Binomial specialization of diag_lemma4 when all d_j are equal.
DiagonalCounts diag_corollary2(const EquationSpec& spec, const DerivedParams& dp);

/// Exact count by dynamic programming over partial-sum values. No hypotheses.
DiagonalCounts diag_oracle(const EquationSpec& spec);

/// Closed form when one applies (cross-checked pairs), oracle otherwise.
DiagonalCounts diag_auto(const EquationSpec& spec, const DerivedParams& dp);

}  // namespace eqcount

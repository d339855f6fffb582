#pragma once

#include <span>
#include <vector>

#include "eqcount/bigint.hpp"

namespace eqcount {

long long gcd_all(std::span<const long long> xs);
long long lcm_all(std::span<const long long> xs);
BigInt lcm_all_big(std::span<const long long> xs);

/// Number of tuples (j_1,...,j_r), 1 <= j_t <= v_t - 1, whose fraction sum
/// j_1/v_1 + ... + j_r/v_r is an integer. Inclusion-exclusion over subsets,
/// cost 2^r.
long long i_count(std::span<const long long> vs);

/// Same quantity by the product closed form, cost v_1*...*v_r. Oracle path.
long long i_count_product(std::span<const long long> vs);

/// Elementary symmetric polynomial sigma_j of zs; sigma_0 = 1.
long long sym_poly(int j, std::span<const int> zs);

/// Coefficients of the delta-th cyclotomic polynomial, constant term first.
std::vector<long long> cyclotomic_poly(int delta);

long long euler_phi(long long n);

}  // namespace eqcount

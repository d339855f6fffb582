#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "eqcount/eqmodel.hpp"

namespace eqcount {

struct SuiteResult {
  std::string name;
  bool passed = false;
  long long cases = 0;
  std::string detail;  // first counterexample, or empty
};

/// Randomized invariant suites for every module, reproducible by seed.
/// budget_scale multiplies the default iteration counts.
std::vector<SuiteResult> run_selftest(std::uint64_t seed, double budget_scale = 1.0);

/// Draws a random valid spec over the given field.
EquationSpec random_spec(const FieldTable& F, std::mt19937_64& rng, int max_n = 4,
                         long long max_exponent = 12);

/// Prime powers q <= bound, ordered.
std::vector<std::pair<long long, int>> prime_powers_upto(long long bound);

}  // namespace eqcount

#pragma once

#include <vector>

#include "eqcount/bigint.hpp"

namespace eqcount {

/// One published experiment row: an equation instance plus its expected count.
/// Table 1 rows take b outside the k0th-power class, Table 2 rows inside it.
struct TableRow {
  int table;  // 1 or 2
  long long p;
  int s;
  long long q;
  int n;
  std::vector<int> a;
  std::vector<long long> m;
  std::vector<long long> kj;
  long long k;
  long long k0;        // published invariant, re-derived and checked
  long long expected;  // published N_q
};

const std::vector<TableRow>& reference_tables();

}  // namespace eqcount

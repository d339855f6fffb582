#pragma once

#include <stdexcept>
#include <vector>

#include "eqcount/eqmodel.hpp"
#include "eqcount/gf.hpp"
#include "eqcount/tables.hpp"

namespace testsupport {

inline eqcount::EquationSpec make_spec(const eqcount::FieldTable& F,
                                       std::vector<int> a, int b,
                                       std::vector<long long> m,
                                       std::vector<long long> kj, long long k) {
  eqcount::EquationSpec spec;
  spec.field = &F;
  spec.n = static_cast<int>(a.size());
  spec.a = std::move(a);
  spec.b = b;
  spec.m = std::move(m);
  spec.kj = std::move(kj);
  spec.k = k;
  return spec;
}

inline const eqcount::TableRow& find_row(int table, long long q) {
  for (const auto& row : eqcount::reference_tables())
    if (row.table == table && row.q == q) return row;
  throw std::logic_error("no such table row");
}

/// Instantiates a table row with the smallest b of the class the row requires
/// (outside the k0th powers for table 1, inside for table 2).
inline eqcount::EquationSpec row_spec(const eqcount::TableRow& row) {
  const eqcount::FieldTable& F = eqcount::field_cache(row.p, row.s);
  eqcount::EquationSpec spec =
      make_spec(F, row.a, 1, row.m, row.kj, row.k);
  spec.b = eqcount::smallest_of_power_class(F, row.k0, row.table == 2);
  return spec;
}

}  // namespace testsupport

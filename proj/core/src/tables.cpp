#include "eqcount/tables.hpp"

namespace eqcount {

const std::vector<TableRow>& reference_tables() {
  // Table 1: b not a k0th power. Table 2: b a k0th power.
  // The q=25 row is published with six coefficients for n=5; the trailing
  // coefficient is dropped here (all-ones either way) and the corrected row
  // reproduces the published count.
  static const std::vector<TableRow> rows = {
      {1, 2, 4, 16, 5, {1, 1, 1, 1, 1}, {2, 4, 6, 8, 10}, {5, 5, 10, 10, 10}, 10, 5, 18076},
      {1, 17, 1, 17, 6, {1, 1, 1, 1, 3, 5}, {2, 6, 6, 8, 10, 14}, {4, 4, 8, 8, 8, 12}, 8, 4, 433249},
      {1, 19, 1, 19, 6, {1, 1, 1, 2, 2, 2}, {2, 2, 2, 6, 14, 14}, {3, 3, 3, 3, 6, 9}, 6, 3, 684901},
      {1, 5, 2, 25, 5, {1, 1, 1, 1, 1}, {3, 9, 10, 15, 18}, {4, 4, 8, 12, 16}, 8, 4, 81553},
      {1, 31, 1, 31, 4, {1, 1, 5, 7}, {5, 7, 9, 11}, {2, 4, 6, 8}, 10, 2, 3661},
      {1, 43, 1, 43, 5, {1, 1, 2, 2, 3}, {5, 8, 8, 12, 28}, {7, 7, 14, 14, 28}, 21, 7, 377665},
      {1, 3, 4, 81, 4, {1, 1, 1, 1}, {4, 4, 12, 28}, {8, 8, 16, 32}, 24, 8, 7041},
      {2, 37, 1, 37, 6, {1, 1, 1, 2, 2, 2}, {1, 2, 2, 2, 4, 6}, {9, 9, 9, 9, 9, 18}, 9, 9, 539998021},
      {2, 47, 1, 47, 5, {1, 1, 1, 5, 5}, {3, 7, 8, 12, 14}, {2, 4, 6, 8, 10}, 4, 2, 9261921},
      {2, 61, 1, 61, 4, {1, 1, 1, 2}, {6, 8, 10, 14}, {6, 6, 6, 6}, 12, 6, 1289641},
      {2, 2, 6, 64, 4, {1, 1, 1, 1}, {9, 18, 27, 36}, {3, 3, 3, 3}, 12, 3, 781975},
      {2, 71, 1, 71, 3, {1, 1, 1}, {3, 15, 49}, {7, 21, 28}, 35, 7, 34028},
      {2, 3, 4, 81, 5, {1, 1, 1, 1, 1}, {3, 15, 30, 35, 70}, {5, 5, 15, 15, 20}, 25, 5, 205707971},
      {2, 97, 1, 97, 3, {1, 7, 7}, {2, 10, 12}, {4, 4, 4}, 8, 4, 36673},
  };
  return rows;
}

}  // namespace eqcount

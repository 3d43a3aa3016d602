#pragma once

#include <cstdint>
#include <vector>

namespace dihedra::cli {

struct ReferenceRow {
  std::int64_t p;
  std::vector<std::vector<std::int64_t>> classes;
  std::int64_t n_tilde;
};

// Reference equivalence classes of Z_p \ {0, 1} for p <= 23, members in the
// order they were printed.
inline const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows{
      {3, {{2}}, 1},
      {5, {{2, 3, 4}}, 1},
      {7, {{2, 4, 6}, {3, 5}}, 2},
      {11, {{2, 6, 10}, {3, 4, 5, 7, 8, 9}}, 2},
      {13, {{2, 7, 12}, {3, 5, 6, 9, 11, 8}, {4, 10}}, 3},
      {17, {{2, 9, 16}, {3, 6, 8, 15, 12, 10}, {4, 5, 7, 13, 14, 11}}, 3},
      {19, {{2, 10, 18}, {3, 7, 9, 11, 13, 17}, {4, 5, 6, 14, 15, 16}, {8, 12}}, 4},
      {23,
       {{2, 12, 22}, {3, 8, 11, 13, 16, 21}, {4, 6, 9, 20, 18, 15}, {5, 7, 10, 14, 17, 19}},
       4},
  };
  return rows;
}

}  // namespace dihedra::cli

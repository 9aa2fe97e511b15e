#pragma once

#include <cstdint>
#include <vector>

#include "mvmnl/instance.hpp"

namespace mvmnl::detail {

// Group-level ratio maximization. Row 0 and column 0 are always on; rows 1..R and
// columns 1..C are the enumeration bits. W holds total weight, V weight times price.
struct GroupProblem {
  int rows = 0;
  int cols = 0;
  Matrix W;
  Matrix V;
  std::vector<int> row_size;  // size rows+1, entry 0 unused
  std::vector<int> col_size;
  int row_cap = -1;           // max total size of active row groups, -1 for none
  int col_cap = -1;
};

struct GroupChoice {
  std::vector<uint8_t> row_on;  // size rows
  std::vector<uint8_t> col_on;  // size cols
  double value = 0.0;
  uint64_t evaluated = 0;
};

GroupProblem make_group_problem(int rows, int cols);

// Exhaustive search. Ties within 1e-12 relative go to the lexicographically smallest
// bit pattern (row 1 most significant, then columns).
GroupChoice enumerate_groups(const GroupProblem& gp);

double group_value(const GroupProblem& gp, const std::vector<uint8_t>& row_on,
                   const std::vector<uint8_t>& col_on);

}  // namespace mvmnl::detail

#pragma once

#include <initializer_list>
#include <vector>

#include "mmat/modmat.hpp"

namespace mmat::test {

inline IntMatrix make_matrix(std::initializer_list<std::initializer_list<Int>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  Int i = 0;
  for (const auto& row : rows) {
    Int j = 0;
    for (Int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// Admissible orders of a family up to a bound, ascending.
inline std::vector<Int> admissible_orders(MatrixType t, Int max_order,
                                          Int min_order = 2) {
  std::vector<Int> orders;
  for (Int n = min_order; n <= max_order; ++n) {
    if (is_admissible_order(n, t)) orders.push_back(n);
  }
  return orders;
}

}  // namespace mmat::test

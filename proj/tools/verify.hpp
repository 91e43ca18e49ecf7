#pragma once

#include <ostream>

#include "mmat/types.hpp"

namespace mmat {

// Re-derives every stated property of the given family for each admissible
// order in [min_order, max_order], printing one line per order. Hard
// assertion failures are counted and returned; observations the source
// statements leave open (missing spectrum values, pair co-occurrence,
// Type II determinants) are printed as findings, not failures.
int run_verify(std::ostream& out, MatrixType mtype, Int min_order,
               Int max_order);

}  // namespace mmat

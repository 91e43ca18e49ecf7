#pragma once

// (1,-1) matrices obtained from base matrices by a parity sign map, with
// counting, exact determinant, and Kronecker product facilities.

#include <utility>

#include "mmat/modmat.hpp"

namespace mmat {

// Symmetric n x n matrix with entries in {+1, -1}.
// Standard, Type I:  value 1 -> +1, other odd values -> -1, even -> +1.
//   First row/column all +1; each row has (n+1)/2 entries +1 (n odd).
// Standard, Type II: even -> +1, odd (including 1) -> -1.
//   Each row and column has exactly n/2 of each sign.
// Flipped (both types): odd (including 1) -> +1, even -> -1.
struct SignMatrix {
  Int n = 0;
  MatrixType mtype = MatrixType::TypeI;
  SignConvention convention = SignConvention::Standard;
  IntMatrix entries;
};

SignMatrix sign_matrix(const BaseMatrix& base,
                       SignConvention convention = SignConvention::Standard);

// The sign a single base value maps to under a convention.
Int sign_of_value(Int value, MatrixType mtype, SignConvention convention);

// (plus_count, minus_count) for a 1-based row index. Throws IndexOutOfRange.
std::pair<Int, Int> row_sign_counts(const SignMatrix& m, Int row);

// Exact integer determinant by fraction-free (Bareiss) elimination with row
// pivoting over arbitrary-precision integers. ArithmeticOverflow is raised
// only if the final value does not fit in 64 bits.
Int determinant(const SignMatrix& m);

// Standard Kronecker product, returned as an untyped (+1,-1) matrix: the
// product order is composite, so the result is never an admissible order
// and must not be treated as a SignMatrix.
IntMatrix kronecker(const SignMatrix& a, const SignMatrix& b);
IntMatrix kronecker_raw(const IntMatrix& a, const IntMatrix& b);

}  // namespace mmat

#pragma once

// Integer base matrices over residues 1..n, the raw modular construction
// behind both (1,-1) matrix families.

#include "mmat/types.hpp"

namespace mmat {

// n x n symmetric matrix over 1..n. Row/column indices are 1-based in the
// documented contract; storage is 0-based Eigen.
struct BaseMatrix {
  Int n = 0;
  MatrixType mtype = MatrixType::TypeI;
  IntMatrix entries;
};

bool is_prime(Int n);

// Type I admits prime n; Type II admits n with n+1 prime. Total function.
bool is_admissible_order(Int n, MatrixType mtype);

// Throws InadmissibleOrder when the primality gate fails.
// Type I:  entries(i,j) = 1 + (i-1)(j-1) mod n, residues represented in 1..n.
// Type II: entries(i,j) = i*j mod (n+1), residues in 1..n (0 cannot occur).
BaseMatrix base_matrix(Int n, MatrixType mtype);

// Principal diagonal of the base matrix.
IntVector diagonal(const BaseMatrix& base);

// The diagonal in closed form, evaluated independently of any matrix:
// Type I:  (x^2 - 2x + 2) mod n for x = 1..n, residues in 1..n.
// Type II: x^2 mod (n+1) for x = 1..n (quadratic residues).
IntVector diagonal_closed_form(Int n, MatrixType mtype);

}  // namespace mmat

#pragma once

// Non-orthogonality analysis: inner products, Gram matrices, the closed-form
// spectrum of achievable row inner products ("orthogonal numbers"), which of
// them a concrete matrix realizes, and the pairing structure on the spectrum.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mmat/signmat.hpp"

namespace mmat {

using RowPair = std::pair<Int, Int>;           // unordered, stored i < j, 1-based
using RealizedSpectrum = std::map<Int, std::vector<RowPair>>;

// <R_i, R_j>, 1-based rows. Throws IndexOutOfRange.
Int inner_product(const SignMatrix& m, Int i, Int j);

// M * M^T. Diagonal is n; off-diagonal entries are the realized values.
IntMatrix gram(const SignMatrix& m);

// All values the inner product of two distinct rows can take, ascending:
// Type I:  4k + 2 - n for k = 0..(n-1)/2   ((n+1)/2 values)
// Type II: 4k - n     for k = 0..n/2       ((n+2)/2 values)
// These formulas presume n odd for Type I, so order 2 is rejected here
// (and by every other spectrum-level function) as InadmissibleOrder.
std::vector<Int> theoretical_spectrum(Int n, MatrixType mtype);

// Map from realized value g to the row pairs achieving it. Type I scans
// rows 2..n only: products against the all-ones first row are the trivial
// value 1 and are excluded from the bookkeeping.
RealizedSpectrum realized_spectrum(const SignMatrix& m);

// self_product is always n; first_row_product is 1 for Type I (all-ones
// first row) and absent for Type II, which has no such row.
struct TrivialNumbers {
  Int self_product = 0;
  std::optional<Int> first_row_product;
};
TrivialNumbers trivial_numbers(const SignMatrix& m);

// Type I only: the pairs (2+i, n-i), i = 0..(n-3)/2, together with their
// inner products, each equal to 2-n. Throws WrongType for Type II.
std::vector<std::pair<RowPair, Int>> opposite_row_products(const SignMatrix& m);

// Values of the spectrum paired by k-parameters summing to (n-1)/2 (Type I)
// or n/2 (Type II). Each Type I pair sums to 2, each Type II pair to 0.
// When the parameter constraint has an integer midpoint the self-paired
// value is emitted as (g, g). Ordered by ascending first member.
std::vector<std::pair<Int, Int>> orthogonal_pairs(Int n, MatrixType mtype);

// Sum of the theoretical spectrum: (n+1)/2 for Type I, 0 for Type II.
Int spectrum_sum(Int n, MatrixType mtype);

struct OrthoReport {
  Int n = 0;
  MatrixType mtype = MatrixType::TypeI;
  IntMatrix gram;
  std::vector<Int> theoretical;
  RealizedSpectrum realized;
  std::vector<Int> missing;   // theoretical minus realized minus trivial values
  std::vector<std::pair<Int, Int>> pairs;
  TrivialNumbers trivial;
};

OrthoReport ortho_report(const SignMatrix& m);

}  // namespace mmat

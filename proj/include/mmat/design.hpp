#pragma once

// Symmetric PBIB designs extracted from sign matrices: incidence matrices,
// concurrence counts, association-scheme inference by exhaustive counting,
// and validation of every defining identity.

#include <string>
#include <vector>

#include "mmat/signmat.hpp"

namespace mmat {

// v x b binary matrix; rows are treatments, columns are blocks.
// Type I provenance: v = b = n-1 (first row/column of the sign matrix
// dropped), row and column weight (n-1)/2.
// Type II provenance: v = b = n, row and column weight n/2.
struct IncidenceMatrix {
  Int v = 0;
  Int b = 0;
  IntMatrix cells;
  // provenance
  MatrixType mtype = MatrixType::TypeI;
  Int n = 0;
  SignConvention convention = SignConvention::Standard;
};

// Throws WrongConvention for Flipped input: designs are defined from the
// Standard convention only.
IncidenceMatrix incidence(const SignMatrix& m);

// Entry (a, b) = number of blocks containing both treatments, computed as
// N * N^T. Diagonal equals the replication count r.
IntMatrix concurrence_matrix(const IncidenceMatrix& inc);

// Classes are indexed 1..m in ascending order of their concurrence value.
// class_of(a-1, b-1) holds the class index of the unordered pair {a, b};
// the diagonal is unused. P[i-1](j-1, l-1) holds p^i_jl.
struct AssociationScheme {
  Int v = 0;
  Int m = 0;
  IntMatrix class_of;
  std::vector<Int> lambda_of;  // per class, ascending
  std::vector<Int> n_of;       // associate count per class
  std::vector<IntMatrix> P;
  bool valid = false;
  std::string failure_witness;  // concrete counterexample when !valid
};

// Partitions pairs by concurrence value and evaluates n_i and every p^i_jl
// by exhaustive counting. A failed scheme condition is a result (valid =
// false plus witness), never an exception.
AssociationScheme infer_scheme(const IntMatrix& concurrence);

struct IdentityCheck {
  std::string name;
  Int lhs = 0;
  Int rhs = 0;
  bool pass = false;
  std::string witness;
};

struct PBIBDesign {
  IncidenceMatrix incidence;
  Int v = 0, b = 0, r = 0, k = 0;
  AssociationScheme scheme;
  bool lambda_range_ok = false;
  Int lambda_max_allowed = 0;
  std::vector<IdentityCheck> identities;
};

// incidence -> concurrence -> infer_scheme, with every defining identity
// evaluated. Throws DegenerateDesign below the smallest sensible order
// (Type I n >= 5, Type II n >= 4); propagates WrongConvention.
PBIBDesign build_design(const SignMatrix& m);

// Same pipeline from a raw incidence matrix (used for synthetic inputs).
PBIBDesign design_from_incidence(const IncidenceMatrix& inc);

struct ValidationReport {
  std::vector<IdentityCheck> checks;
  bool scheme_valid = false;
  bool pass = false;
  std::string witness;
};

// Re-evaluates each identity with both sides, plus occupancy checks:
// 0/1 cells, block size k < v, every treatment in exactly r blocks.
ValidationReport validate_pbib(const PBIBDesign& d);

}  // namespace mmat

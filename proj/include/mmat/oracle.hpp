#pragma once

// Brute-force reference implementations used by the test suites to
// adjudicate derived values. These deliberately share no arithmetic with
// the main modules: literal summation loops, exhaustive triple enumeration,
// and cofactor expansion, duplicated on purpose.

#include "mmat/design.hpp"

namespace mmat {
namespace oracle {

struct OracleVerdict {
  std::string subject;
  std::string main_value;
  std::string oracle_value;
  bool agree = false;
};

OracleVerdict verdict(std::string subject, std::string main_value,
                      std::string oracle_value);

// Literal triple-loop Gram matrix.
IntMatrix oracle_gram(const SignMatrix& m);

// Scheme recomputed from scratch: concurrences by literal dot products,
// classes by value, n_i and p^i_jl by enumerating all symbol triples.
AssociationScheme oracle_scheme(const IncidenceMatrix& inc);

// Cofactor-expansion determinant; exponential, so orders above 10 are
// rejected with OrderTooLarge.
Int oracle_determinant(const SignMatrix& m);

}  // namespace oracle
}  // namespace mmat

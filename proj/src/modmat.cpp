#include "mmat/modmat.hpp"

namespace mmat {

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_admissible_order(Int n, MatrixType mtype) {
  if (n < 2) return false;
  return mtype == MatrixType::TypeI ? is_prime(n) : is_prime(n + 1);
}

namespace {

// Residue of v modulo m, represented in 1..m instead of 0..m-1.
Int residue_1_to_m(Int v, Int m) {
  Int r = v % m;
  if (r <= 0) r += m;
  return r;
}

void require_admissible(Int n, MatrixType mtype) {
  if (is_admissible_order(n, mtype)) return;
  if (mtype == MatrixType::TypeI) {
    throw InadmissibleOrder(std::to_string(n) + " is not prime");
  }
  throw InadmissibleOrder(std::to_string(n) + "+1 = " + std::to_string(n + 1) +
                          " is not prime");
}

}  // namespace

BaseMatrix base_matrix(Int n, MatrixType mtype) {
  require_admissible(n, mtype);
  BaseMatrix base;
  base.n = n;
  base.mtype = mtype;
  base.entries.resize(n, n);
  for (Int i = 1; i <= n; ++i) {
    for (Int j = 1; j <= n; ++j) {
      Int v = mtype == MatrixType::TypeI
                  ? 1 + (i - 1) * (j - 1) % n
                  : residue_1_to_m(i * j, n + 1);
      base.entries(i - 1, j - 1) = v;
    }
  }
  return base;
}

IntVector diagonal(const BaseMatrix& base) {
  return base.entries.diagonal();
}

IntVector diagonal_closed_form(Int n, MatrixType mtype) {
  require_admissible(n, mtype);
  IntVector d(n);
  for (Int x = 1; x <= n; ++x) {
    d(x - 1) = mtype == MatrixType::TypeI
                   ? residue_1_to_m(x * x - 2 * x + 2, n)
                   : residue_1_to_m(x * x, n + 1);
  }
  return d;
}

}  // namespace mmat

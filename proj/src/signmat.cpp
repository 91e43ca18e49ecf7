#include "mmat/signmat.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <vector>

namespace mmat {

Int sign_of_value(Int value, MatrixType mtype, SignConvention convention) {
  if (convention == SignConvention::Flipped) {
    return value % 2 != 0 ? 1 : -1;
  }
  if (mtype == MatrixType::TypeI) {
    if (value == 1) return 1;
    return value % 2 == 0 ? 1 : -1;
  }
  return value % 2 == 0 ? 1 : -1;
}

SignMatrix sign_matrix(const BaseMatrix& base, SignConvention convention) {
  SignMatrix m;
  m.n = base.n;
  m.mtype = base.mtype;
  m.convention = convention;
  m.entries = base.entries.unaryExpr([&](Int v) {
    return sign_of_value(v, base.mtype, convention);
  });
  return m;
}

std::pair<Int, Int> row_sign_counts(const SignMatrix& m, Int row) {
  if (row < 1 || row > m.n) {
    throw IndexOutOfRange("row " + std::to_string(row) + " not in 1.." +
                          std::to_string(m.n));
  }
  Int plus = (m.entries.row(row - 1).array() == 1).count();
  return {plus, m.n - plus};
}

Int determinant(const SignMatrix& m) {
  // Intermediate entries are exact minors; they outgrow any fixed-width
  // integer well before order 61, so the elimination runs on big integers.
  using Wide = boost::multiprecision::cpp_int;
  const Int n = m.n;
  std::vector<Wide> w(static_cast<std::size_t>(n) * n);
  for (Int i = 0; i < n; ++i) {
    for (Int j = 0; j < n; ++j) w[i * n + j] = m.entries(i, j);
  }

  Int sign = 1;
  Wide prev = 1;
  for (Int k = 0; k + 1 < n; ++k) {
    Int pivot = -1;
    for (Int i = k; i < n; ++i) {
      if (w[i * n + k] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != k) {
      for (Int j = 0; j < n; ++j) std::swap(w[k * n + j], w[pivot * n + j]);
      sign = -sign;
    }
    // One Bareiss step: every updated entry is an exact (k+2)-minor and the
    // division by the previous pivot leaves no remainder.
    for (Int i = k + 1; i < n; ++i) {
      for (Int j = k + 1; j < n; ++j) {
        w[i * n + j] =
            (w[i * n + j] * w[k * n + k] - w[i * n + k] * w[k * n + j]) / prev;
      }
      w[i * n + k] = 0;
    }
    prev = w[k * n + k];
  }

  const Wide det = sign * w[(n - 1) * n + (n - 1)];
  if (det > std::numeric_limits<Int>::max() ||
      det < std::numeric_limits<Int>::min()) {
    throw ArithmeticOverflow("determinant does not fit in 64 bits");
  }
  return static_cast<Int>(det);
}

IntMatrix kronecker_raw(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Int i = 0; i < a.rows(); ++i) {
    for (Int j = 0; j < a.cols(); ++j) {
      k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return k;
}

IntMatrix kronecker(const SignMatrix& a, const SignMatrix& b) {
  return kronecker_raw(a.entries, b.entries);
}

}  // namespace mmat

#include "mmat/ortho.hpp"

#include <algorithm>

namespace mmat {

namespace {

// The Type I spectrum formulas divide by 2 all over; they hold for odd
// primes only, so the even prime 2 is shut out of spectrum-level analysis.
void require_spectrum_order(Int n, MatrixType mtype) {
  if (!is_admissible_order(n, mtype)) {
    if (mtype == MatrixType::TypeI) {
      throw InadmissibleOrder(std::to_string(n) + " is not prime");
    }
    throw InadmissibleOrder(std::to_string(n) + "+1 = " +
                            std::to_string(n + 1) + " is not prime");
  }
  if (mtype == MatrixType::TypeI && n == 2) {
    throw InadmissibleOrder(
        "Type I spectrum analysis requires an odd prime order, not 2");
  }
}

}  // namespace

Int inner_product(const SignMatrix& m, Int i, Int j) {
  if (i < 1 || i > m.n || j < 1 || j > m.n) {
    throw IndexOutOfRange("row pair (" + std::to_string(i) + ", " +
                          std::to_string(j) + ") not in 1.." +
                          std::to_string(m.n));
  }
  return m.entries.row(i - 1).dot(m.entries.row(j - 1));
}

IntMatrix gram(const SignMatrix& m) {
  return m.entries * m.entries.transpose();
}

std::vector<Int> theoretical_spectrum(Int n, MatrixType mtype) {
  require_spectrum_order(n, mtype);
  std::vector<Int> spectrum;
  if (mtype == MatrixType::TypeI) {
    for (Int k = 0; k <= (n - 1) / 2; ++k) spectrum.push_back(4 * k + 2 - n);
  } else {
    for (Int k = 0; k <= n / 2; ++k) spectrum.push_back(4 * k - n);
  }
  return spectrum;
}

RealizedSpectrum realized_spectrum(const SignMatrix& m) {
  const IntMatrix g = gram(m);
  const Int first = m.mtype == MatrixType::TypeI ? 2 : 1;
  RealizedSpectrum realized;
  for (Int i = first; i <= m.n; ++i) {
    for (Int j = i + 1; j <= m.n; ++j) {
      realized[g(i - 1, j - 1)].push_back({i, j});
    }
  }
  return realized;
}

TrivialNumbers trivial_numbers(const SignMatrix& m) {
  TrivialNumbers t;
  t.self_product = m.n;
  if (m.mtype == MatrixType::TypeI) t.first_row_product = 1;
  return t;
}

std::vector<std::pair<RowPair, Int>> opposite_row_products(const SignMatrix& m) {
  if (m.mtype != MatrixType::TypeI) {
    throw WrongType("opposite-row products are a Type I statement");
  }
  std::vector<std::pair<RowPair, Int>> out;
  for (Int i = 0; i <= (m.n - 3) / 2; ++i) {
    const Int a = 2 + i;
    const Int b = m.n - i;
    out.push_back({{a, b}, inner_product(m, a, b)});
  }
  return out;
}

std::vector<std::pair<Int, Int>> orthogonal_pairs(Int n, MatrixType mtype) {
  require_spectrum_order(n, mtype);
  const Int param_sum = mtype == MatrixType::TypeI ? (n - 1) / 2 : n / 2;
  const Int offset = mtype == MatrixType::TypeI ? 2 - n : -n;
  std::vector<std::pair<Int, Int>> pairs;
  for (Int k = 0; 2 * k <= param_sum; ++k) {
    pairs.push_back({4 * k + offset, 4 * (param_sum - k) + offset});
  }
  return pairs;
}

Int spectrum_sum(Int n, MatrixType mtype) {
  const auto spectrum = theoretical_spectrum(n, mtype);
  Int sum = 0;
  for (Int g : spectrum) sum += g;
  return sum;
}

OrthoReport ortho_report(const SignMatrix& m) {
  OrthoReport report;
  report.n = m.n;
  report.mtype = m.mtype;
  report.theoretical = theoretical_spectrum(m.n, m.mtype);
  report.gram = gram(m);
  report.realized = realized_spectrum(m);
  report.trivial = trivial_numbers(m);
  report.pairs = orthogonal_pairs(m.n, m.mtype);
  for (Int g : report.theoretical) {
    if (report.realized.count(g)) continue;
    if (g == report.trivial.self_product) continue;
    if (report.trivial.first_row_product &&
        g == *report.trivial.first_row_product) {
      continue;
    }
    report.missing.push_back(g);
  }
  return report;
}

}  // namespace mmat

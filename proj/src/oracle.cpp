#include "mmat/oracle.hpp"

#include <algorithm>
#include <vector>

namespace mmat {
namespace oracle {

OracleVerdict verdict(std::string subject, std::string main_value,
                      std::string oracle_value) {
  OracleVerdict v;
  v.subject = std::move(subject);
  v.agree = main_value == oracle_value;
  v.main_value = std::move(main_value);
  v.oracle_value = std::move(oracle_value);
  return v;
}

IntMatrix oracle_gram(const SignMatrix& m) {
  const Int n = m.n;
  IntMatrix g(n, n);
  for (Int i = 0; i < n; ++i) {
    for (Int j = 0; j < n; ++j) {
      Int sum = 0;
      for (Int t = 0; t < n; ++t) sum += m.entries(i, t) * m.entries(j, t);
      g(i, j) = sum;
    }
  }
  return g;
}

AssociationScheme oracle_scheme(const IncidenceMatrix& inc) {
  const Int v = inc.v;
  AssociationScheme s;
  s.v = v;

  // Concurrence of every pair by literal summation.
  std::vector<std::vector<Int>> conc(v, std::vector<Int>(v, 0));
  for (Int a = 0; a < v; ++a) {
    for (Int b = 0; b < v; ++b) {
      Int together = 0;
      for (Int c = 0; c < inc.b; ++c) {
        if (inc.cells(a, c) == 1 && inc.cells(b, c) == 1) together += 1;
      }
      conc[a][b] = together;
    }
  }

  std::vector<Int> lambdas;
  for (Int a = 0; a < v; ++a) {
    for (Int b = 0; b < v; ++b) {
      if (a != b &&
          std::find(lambdas.begin(), lambdas.end(), conc[a][b]) == lambdas.end()) {
        lambdas.push_back(conc[a][b]);
      }
    }
  }
  std::sort(lambdas.begin(), lambdas.end());
  s.m = static_cast<Int>(lambdas.size());
  s.lambda_of = lambdas;

  auto class_of = [&](Int a, Int b) {
    for (Int c = 0; c < s.m; ++c) {
      if (lambdas[c] == conc[a][b]) return c + 1;
    }
    return Int{0};
  };

  s.class_of = IntMatrix::Zero(v, v);
  for (Int a = 0; a < v; ++a) {
    for (Int b = 0; b < v; ++b) {
      if (a != b) s.class_of(a, b) = class_of(a, b);
    }
  }

  s.valid = true;
  s.n_of.assign(s.m, 0);
  for (Int c = 1; c <= s.m; ++c) {
    Int count = 0;
    for (Int b = 1; b < v; ++b) {
      if (class_of(0, b) == c) count += 1;
    }
    s.n_of[c - 1] = count;
  }
  for (Int a = 0; a < v && s.valid; ++a) {
    for (Int c = 1; c <= s.m; ++c) {
      Int count = 0;
      for (Int b = 0; b < v; ++b) {
        if (b != a && class_of(a, b) == c) count += 1;
      }
      if (count != s.n_of[c - 1]) {
        s.valid = false;
        s.failure_witness = "associate count of class " + std::to_string(c) +
                            " differs at symbol " + std::to_string(a + 1);
      }
    }
  }

  // Every ordered symbol triple, tallied against the first pair seen.
  s.P.assign(s.m, IntMatrix::Zero(s.m, s.m));
  std::vector<bool> seen(s.m, false);
  for (Int a = 0; a < v; ++a) {
    for (Int b = 0; b < v; ++b) {
      if (a == b) continue;
      const Int i = class_of(a, b);
      IntMatrix counts = IntMatrix::Zero(s.m, s.m);
      for (Int g = 0; g < v; ++g) {
        if (g == a || g == b) continue;
        counts(class_of(a, g) - 1, class_of(b, g) - 1) += 1;
      }
      if (!seen[i - 1]) {
        seen[i - 1] = true;
        s.P[i - 1] = counts;
      } else if (s.valid && s.P[i - 1] != counts) {
        s.valid = false;
        s.failure_witness = "triple counts of class " + std::to_string(i) +
                            " differ at pair (" + std::to_string(a + 1) + "," +
                            std::to_string(b + 1) + ")";
      }
    }
  }
  return s;
}

namespace {

Int cofactor_det(const std::vector<Int>& a, Int n) {
  if (n == 1) return a[0];
  Int det = 0;
  Int sign = 1;
  std::vector<Int> minor((n - 1) * (n - 1));
  for (Int c = 0; c < n; ++c) {
    for (Int i = 1; i < n; ++i) {
      Int mj = 0;
      for (Int j = 0; j < n; ++j) {
        if (j == c) continue;
        minor[(i - 1) * (n - 1) + mj] = a[i * n + j];
        ++mj;
      }
    }
    det += sign * a[c] * cofactor_det(minor, n - 1);
    sign = -sign;
  }
  return det;
}

}  // namespace

Int oracle_determinant(const SignMatrix& m) {
  if (m.n > 10) {
    throw OrderTooLarge("cofactor expansion limited to order 10, got " +
                        std::to_string(m.n));
  }
  std::vector<Int> a(static_cast<std::size_t>(m.n) * m.n);
  for (Int i = 0; i < m.n; ++i) {
    for (Int j = 0; j < m.n; ++j) a[i * m.n + j] = m.entries(i, j);
  }
  return cofactor_det(a, m.n);
}

}  // namespace oracle
}  // namespace mmat

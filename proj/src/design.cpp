#include "mmat/design.hpp"

#include <algorithm>
#include <map>

namespace mmat {

IncidenceMatrix incidence(const SignMatrix& m) {
  if (m.convention != SignConvention::Standard) {
    throw WrongConvention("designs are extracted from the standard convention");
  }
  IncidenceMatrix inc;
  inc.mtype = m.mtype;
  inc.n = m.n;
  inc.convention = m.convention;
  if (m.mtype == MatrixType::TypeI) {
    inc.v = inc.b = m.n - 1;
    inc.cells = m.entries.block(1, 1, inc.v, inc.b);
  } else {
    inc.v = inc.b = m.n;
    inc.cells = m.entries;
  }
  inc.cells = inc.cells.unaryExpr([](Int s) { return s == 1 ? Int{1} : Int{0}; });
  return inc;
}

IntMatrix concurrence_matrix(const IncidenceMatrix& inc) {
  return inc.cells * inc.cells.transpose();
}

AssociationScheme infer_scheme(const IntMatrix& concurrence) {
  AssociationScheme s;
  const Int v = concurrence.rows();
  s.v = v;

  std::vector<Int> values;
  for (Int a = 0; a < v; ++a) {
    for (Int b = a + 1; b < v; ++b) values.push_back(concurrence(a, b));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  s.m = static_cast<Int>(values.size());
  s.lambda_of = values;

  std::map<Int, Int> class_index;  // concurrence value -> class 1..m
  for (Int c = 0; c < s.m; ++c) class_index[values[c]] = c + 1;

  s.class_of = IntMatrix::Zero(v, v);
  for (Int a = 0; a < v; ++a) {
    for (Int b = 0; b < v; ++b) {
      if (a != b) s.class_of(a, b) = class_index[concurrence(a, b)];
    }
  }

  s.valid = true;

  // n_i: associate counts must not depend on the symbol.
  s.n_of.assign(s.m, 0);
  for (Int c = 1; c <= s.m; ++c) {
    s.n_of[c - 1] = (s.class_of.row(0).array() == c).count();
  }
  for (Int a = 1; a < v && s.valid; ++a) {
    for (Int c = 1; c <= s.m; ++c) {
      Int count = (s.class_of.row(a).array() == c).count();
      if (count != s.n_of[c - 1]) {
        s.valid = false;
        s.failure_witness = "n_" + std::to_string(c) + " depends on the symbol: " +
                            std::to_string(s.n_of[c - 1]) + " for symbol 1, " +
                            std::to_string(count) + " for symbol " +
                            std::to_string(a + 1);
        break;
      }
    }
  }

  // p^i_jl: counted for every ordered pair of each class and required
  // constant. Checking ordered pairs also forces P_i symmetric, since (a, b)
  // and (b, a) produce transposed counts.
  s.P.assign(s.m, IntMatrix::Zero(s.m, s.m));
  std::vector<bool> seen(s.m, false);
  IntMatrix counts(s.m, s.m);
  for (Int a = 0; a < v; ++a) {
    for (Int b = 0; b < v; ++b) {
      if (a == b) continue;
      const Int i = s.class_of(a, b);
      counts.setZero();
      for (Int g = 0; g < v; ++g) {
        if (g == a || g == b) continue;
        counts(s.class_of(a, g) - 1, s.class_of(b, g) - 1) += 1;
      }
      if (!seen[i - 1]) {
        seen[i - 1] = true;
        s.P[i - 1] = counts;
      } else if (s.valid && s.P[i - 1] != counts) {
        s.valid = false;
        s.failure_witness = "p^" + std::to_string(i) +
                            "_jl depends on the pair: symbols (" +
                            std::to_string(a + 1) + "," + std::to_string(b + 1) +
                            ") disagree with the first pair of class " +
                            std::to_string(i);
      }
    }
  }
  return s;
}

namespace {

IdentityCheck check(std::string name, Int lhs, Int rhs, std::string witness = {}) {
  IdentityCheck c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.pass = lhs == rhs;
  c.witness = std::move(witness);
  return c;
}

}  // namespace

PBIBDesign design_from_incidence(const IncidenceMatrix& inc) {
  PBIBDesign d;
  d.incidence = inc;
  d.v = inc.v;
  d.b = inc.b;
  d.r = inc.v > 0 ? inc.cells.row(0).sum() : 0;
  d.k = inc.b > 0 ? inc.cells.col(0).sum() : 0;
  d.scheme = infer_scheme(concurrence_matrix(inc));

  d.identities.push_back(check("vr = bk", d.v * d.r, d.b * d.k));

  Int n_sum = 0;
  Int nl_sum = 0;
  for (Int c = 0; c < d.scheme.m; ++c) {
    n_sum += d.scheme.n_of[c];
    nl_sum += d.scheme.n_of[c] * d.scheme.lambda_of[c];
  }
  d.identities.push_back(check("sum n_i = v-1", n_sum, d.v - 1));
  d.identities.push_back(check("sum n_i*lambda_i = r(k-1)", nl_sum,
                               d.r * (d.k - 1)));

  // sum_l p^i_jl = n_j - delta_ij, aggregated with a first-failure witness.
  IdentityCheck psum = check("sum_l p^i_jl = n_j - delta_ij", 0, 0);
  for (Int i = 1; i <= d.scheme.m && psum.pass; ++i) {
    for (Int j = 1; j <= d.scheme.m && psum.pass; ++j) {
      const Int lhs = d.scheme.P[i - 1].row(j - 1).sum();
      const Int rhs = d.scheme.n_of[j - 1] - (i == j ? 1 : 0);
      if (lhs != rhs) {
        psum.lhs = lhs;
        psum.rhs = rhs;
        psum.pass = false;
        psum.witness = "fails at i=" + std::to_string(i) +
                       ", j=" + std::to_string(j);
      }
    }
  }
  d.identities.push_back(psum);

  if (inc.n > 0) {
    d.lambda_max_allowed =
        inc.mtype == MatrixType::TypeI ? (inc.n - 3) / 2 : (inc.n - 2) / 2;
  } else {
    d.lambda_max_allowed = d.k > 0 ? d.k - 1 : 0;
  }
  d.lambda_range_ok = true;
  for (Int lambda : d.scheme.lambda_of) {
    if (lambda < 0 || lambda > d.lambda_max_allowed) d.lambda_range_ok = false;
  }
  return d;
}

PBIBDesign build_design(const SignMatrix& m) {
  const Int min_order = m.mtype == MatrixType::TypeI ? 5 : 4;
  if (m.n < min_order) {
    throw DegenerateDesign("Type " + std::string(to_string(m.mtype)) +
                           " order " + std::to_string(m.n) +
                           " yields a degenerate design; smallest order is " +
                           std::to_string(min_order));
  }
  return design_from_incidence(incidence(m));
}

ValidationReport validate_pbib(const PBIBDesign& d) {
  ValidationReport report;
  report.checks = d.identities;
  report.scheme_valid = d.scheme.valid;

  const IntMatrix& cells = d.incidence.cells;
  bool binary = true;
  for (Int i = 0; i < cells.rows() && binary; ++i) {
    for (Int j = 0; j < cells.cols(); ++j) {
      if (cells(i, j) != 0 && cells(i, j) != 1) {
        binary = false;
        break;
      }
    }
  }
  report.checks.push_back(check("cells are 0/1", binary ? 1 : 0, 1));
  report.checks.push_back(check("block size k < v", d.k < d.v ? 1 : 0, 1,
                                "k = " + std::to_string(d.k) + ", v = " +
                                    std::to_string(d.v)));

  bool replication_ok = true;
  for (Int a = 0; a < d.v; ++a) {
    if (cells.row(a).sum() != d.r) replication_ok = false;
  }
  report.checks.push_back(
      check("every treatment occurs in exactly r blocks", replication_ok ? 1 : 0, 1));

  bool block_size_ok = true;
  for (Int c = 0; c < d.b; ++c) {
    if (cells.col(c).sum() != d.k) block_size_ok = false;
  }
  report.checks.push_back(check("every block has exactly k treatments",
                                block_size_ok ? 1 : 0, 1));
  report.checks.push_back(check("lambda values within allowed range",
                                d.lambda_range_ok ? 1 : 0, 1,
                                "max allowed " +
                                    std::to_string(d.lambda_max_allowed)));

  report.pass = report.scheme_valid;
  for (const auto& c : report.checks) {
    if (!c.pass) report.pass = false;
  }
  if (!report.pass) {
    report.witness = !d.scheme.valid ? d.scheme.failure_witness : "";
    if (report.witness.empty()) {
      for (const auto& c : report.checks) {
        if (!c.pass) {
          report.witness = c.name + ": " + std::to_string(c.lhs) +
                           " != " + std::to_string(c.rhs);
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace mmat

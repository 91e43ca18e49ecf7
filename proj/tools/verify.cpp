#include "verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "mmat/design.hpp"
#include "mmat/graph.hpp"
#include "mmat/modmat.hpp"
#include "mmat/ortho.hpp"
#include "mmat/signmat.hpp"

namespace mmat {

namespace {

// Collects one order's checks into a compact section table like
//   n=11  base:ok diag:ok signs:ok gram:ok sums:ok det:ok(0) design:ok graph:ok
// with failed assertions detailed on their own lines and unasserted
// observations printed as findings.
class OrderChecker {
 public:
  OrderChecker(std::ostream& out, Int n) : out_(out), n_(n) {}

  void section(const std::string& name) {
    sections_.push_back({name, "", true});
  }

  void annotate(const std::string& text) { sections_.back().note = text; }

  void skip_section(const std::string& name) {
    sections_.push_back({name, "", true});
    sections_.back().skipped = true;
  }

  void require(bool condition, const std::string& what) {
    if (condition) return;
    sections_.back().ok = false;
    ++failures_;
    out_ << "n=" << n_ << "  ASSERTION FAILED: " << what << '\n';
  }

  void finding(const std::string& what) {
    out_ << "n=" << n_ << "  finding: " << what << '\n';
  }

  void print_row() {
    out_ << "n=" << n_ << " ";
    for (const auto& s : sections_) {
      out_ << ' ' << s.name << ':';
      if (s.skipped) {
        out_ << '-';
      } else {
        out_ << (s.ok ? "ok" : "FAIL");
      }
      if (!s.note.empty()) out_ << '(' << s.note << ')';
    }
    out_ << '\n';
  }

  int failures() const { return failures_; }

 private:
  struct Section {
    std::string name;
    std::string note;
    bool ok = true;
    bool skipped = false;
  };
  std::ostream& out_;
  Int n_;
  std::vector<Section> sections_;
  int failures_ = 0;
};

bool is_permutation_of_1_to_n(const IntVector& row, Int n) {
  std::vector<bool> seen(n + 1, false);
  for (Int t = 0; t < n; ++t) {
    Int v = row(t);
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void check_base(OrderChecker& chk, const BaseMatrix& base) {
  const Int n = base.n;
  chk.section("base");
  chk.require(base.entries == base.entries.transpose().eval(),
              "base matrix symmetric");
  if (base.mtype == MatrixType::TypeI) {
    chk.require((base.entries.row(0).array() == 1).all() &&
                    (base.entries.col(0).array() == 1).all(),
                "first row and column all 1");
    for (Int i = 1; i < n; ++i) {
      chk.require(is_permutation_of_1_to_n(base.entries.row(i), n),
                  "row " + std::to_string(i + 1) + " is a permutation of 1..n");
    }
  } else {
    for (Int i = 0; i < n; ++i) {
      chk.require(is_permutation_of_1_to_n(base.entries.row(i), n),
                  "row " + std::to_string(i + 1) + " is a permutation of 1..n");
      chk.require(is_permutation_of_1_to_n(base.entries.col(i), n),
                  "column " + std::to_string(i + 1) +
                      " is a permutation of 1..n");
    }
  }

  chk.section("diag");
  chk.require(diagonal(base) == diagonal_closed_form(n, base.mtype),
              "diagonal equals closed form");
  const IntVector diag = diagonal(base);
  if (base.mtype == MatrixType::TypeI) {
    bool palindrome = true;
    for (Int t = 1; t < n; ++t) {
      if (diag(t) != diag(n - t)) palindrome = false;
    }
    chk.require(palindrome, "diagonal tail is a palindrome");
  } else {
    bool palindrome = true;
    for (Int t = 0; t < n; ++t) {
      if (diag(t) != diag(n - 1 - t)) palindrome = false;
    }
    chk.require(palindrome, "diagonal is a palindrome");
  }
}

void check_signs(OrderChecker& chk, const SignMatrix& m) {
  const Int n = m.n;
  chk.section("signs");
  chk.require(m.entries == m.entries.transpose().eval(),
              "sign matrix symmetric");
  if (m.mtype == MatrixType::TypeI) {
    if (n == 2) return;  // even prime: the (n+-1)/2 statements need n odd
    auto [p1, m1] = row_sign_counts(m, 1);
    chk.require(p1 == n && m1 == 0, "first row all +1");
    for (Int i = 2; i <= n; ++i) {
      auto [plus, minus] = row_sign_counts(m, i);
      chk.require(plus == (n + 1) / 2 && minus == (n - 1) / 2,
                  "row " + std::to_string(i) + " sign counts");
      chk.require(m.entries.row(i - 1).sum() == 1,
                  "row " + std::to_string(i) + " sums to 1");
    }
    chk.require(m.entries.row(0).sum() == n, "first row sums to n");
  } else {
    for (Int i = 1; i <= n; ++i) {
      auto [plus, minus] = row_sign_counts(m, i);
      chk.require(plus == n / 2 && minus == n / 2,
                  "row " + std::to_string(i) + " has n/2 of each sign");
      chk.require(m.entries.row(i - 1).sum() == 0 &&
                      m.entries.col(i - 1).sum() == 0,
                  "row and column " + std::to_string(i) + " sum to 0");
    }
  }
}

void check_spectrum(OrderChecker& chk, const SignMatrix& m) {
  const Int n = m.n;
  const auto theoretical = theoretical_spectrum(n, m.mtype);
  const std::set<Int> allowed(theoretical.begin(), theoretical.end());
  const IntMatrix g = gram(m);

  chk.section("gram");
  for (Int i = 0; i < n; ++i) {
    chk.require(g(i, i) == n, "gram diagonal equals n");
  }
  const Int congruence =
      ((m.mtype == MatrixType::TypeI ? 2 - n : -n) % 4 + 4) % 4;
  const Int first = m.mtype == MatrixType::TypeI ? 1 : 0;
  if (m.mtype == MatrixType::TypeI) {
    for (Int j = 1; j < n; ++j) {
      chk.require(g(0, j) == 1 && g(j, 0) == 1, "gram first row/column is 1");
    }
  }
  for (Int i = first; i < n; ++i) {
    for (Int j = i + 1; j < n; ++j) {
      chk.require(allowed.count(g(i, j)) == 1,
                  "gram(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                      ") = " + std::to_string(g(i, j)) +
                      " lies in the closed-form spectrum");
      chk.require((g(i, j) % 4 + 4) % 4 == congruence,
                  "gram entry congruent to spectrum mod 4");
    }
  }
  if (m.mtype == MatrixType::TypeI) {
    for (const auto& [rows, value] : opposite_row_products(m)) {
      chk.require(value == 2 - n,
                  "<R_" + std::to_string(rows.first) + ", R_" +
                      std::to_string(rows.second) + "> = 2-n");
    }
  }

  chk.section("sums");
  const Int expected_sum = m.mtype == MatrixType::TypeI ? (n + 1) / 2 : 0;
  chk.require(spectrum_sum(n, m.mtype) == expected_sum, "spectrum sum identity");
  const Int pair_sum = m.mtype == MatrixType::TypeI ? 2 : 0;
  for (const auto& [g1, g2] : orthogonal_pairs(n, m.mtype)) {
    chk.require(g1 + g2 == pair_sum,
                "orthogonal pair sums to " + std::to_string(pair_sum));
  }

  // Findings: which theoretical values the matrix realizes, and whether the
  // members of each orthogonal pair co-occur (the trivial values n and, for
  // Type I, 1 count as present).
  const auto report = ortho_report(m);
  if (!report.missing.empty()) {
    std::ostringstream line;
    line << "missing orthogonal numbers:";
    for (Int v : report.missing) line << ' ' << v;
    chk.finding(line.str());
  }
  auto present = [&](Int value) {
    if (report.realized.count(value)) return true;
    if (value == n) return true;
    return m.mtype == MatrixType::TypeI && value == 1;
  };
  for (const auto& [g1, g2] : report.pairs) {
    const bool a = present(g1);
    const bool b = present(g2);
    if (a != b) {
      std::ostringstream line;
      line << "pair (" << g1 << "," << g2 << ") realized only on one side ("
           << (a ? g1 : g2) << ")";
      chk.finding(line.str());
    }
  }
}

void check_determinant(OrderChecker& chk, const SignMatrix& m) {
  const Int n = m.n;
  chk.section("det");
  const Int det = determinant(m);
  chk.annotate(std::to_string(det));
  if (m.mtype == MatrixType::TypeI) {
    if (n == 3) {
      chk.require(det == -4, "determinant is -4 at n=3");
    } else if (n >= 5) {
      chk.require(det == 0, "determinant is 0 for n >= 5");
    }
  }
  // no stated value for Type II; the annotation reports it
}

void check_design(OrderChecker& chk, const SignMatrix& m) {
  const Int min_order = m.mtype == MatrixType::TypeI ? 5 : 4;
  if (m.n < min_order) {
    chk.skip_section("design");
    return;
  }
  chk.section("design");
  const auto d = build_design(m);
  const auto validation = validate_pbib(d);
  for (const auto& check : validation.checks) {
    chk.require(check.pass, check.name + " (" + std::to_string(check.lhs) +
                                " vs " + std::to_string(check.rhs) + ")");
  }
  chk.require(d.lambda_range_ok, "lambda values within stated range");

  const Int expected_rk = m.mtype == MatrixType::TypeI ? (m.n - 1) / 2 : m.n / 2;
  const Int expected_v = m.mtype == MatrixType::TypeI ? m.n - 1 : m.n;
  chk.require(d.v == expected_v && d.b == expected_v, "v = b as stated");
  chk.require(d.r == expected_rk && d.k == expected_rk, "r = k as stated");

  // Whether the lambda classes form a full association scheme is an
  // existence claim the construction does not always satisfy; report it.
  chk.annotate(d.scheme.valid ? "scheme" : "no-scheme");
  if (!d.scheme.valid) {
    chk.finding("lambda classes are not an association scheme: " +
                d.scheme.failure_witness);
  }
}

void check_graph(OrderChecker& chk, const SignMatrix& m) {
  chk.section("graph");
  const auto inc = incidence(m);
  const auto g = bipartite_graph(inc);
  const auto regularity = check_regular(g);
  const Int degree = m.mtype == MatrixType::TypeI ? (m.n - 1) / 2 : m.n / 2;
  const Int part = m.mtype == MatrixType::TypeI ? m.n - 1 : m.n;
  chk.require(regularity.is_regular, "bipartite graph regular");
  chk.require(regularity.degree == degree, "graph degree as stated");
  chk.require(regularity.left_size == part && regularity.right_size == part,
              "graph part sizes as stated");
  chk.require(regularity.edge_count == part * degree,
              "edge count = part size * degree");
  chk.require(incidence_cells(g) == inc.cells, "graph round-trips to incidence");
  chk.annotate(std::to_string(connected_components(g).size()) + "comp");
}

}  // namespace

int run_verify(std::ostream& out, MatrixType mtype, Int min_order,
               Int max_order) {
  int failures = 0;
  int checked = 0;
  for (Int n = std::max<Int>(2, min_order); n <= max_order; ++n) {
    if (!is_admissible_order(n, mtype)) continue;
    ++checked;
    OrderChecker chk(out, n);
    const auto base = base_matrix(n, mtype);
    const auto m = sign_matrix(base);
    check_base(chk, base);
    check_signs(chk, m);
    if (mtype == MatrixType::TypeI && n == 2) {
      // spectrum-level statements need an odd prime
      chk.skip_section("gram");
      chk.skip_section("sums");
      chk.skip_section("det");
      chk.skip_section("design");
      chk.skip_section("graph");
    } else {
      check_spectrum(chk, m);
      check_determinant(chk, m);
      check_design(chk, m);
      check_graph(chk, m);
    }
    chk.print_row();
    failures += chk.failures();
  }

  out << '\n'
      << "checked " << checked << " order(s), " << failures
      << " assertion failure(s)\n";

  out << "\nnotes on the source statements:\n"
         "  - the stated spectrum-sum (n+1)/2 for Type II contradicts its own\n"
         "    derivation; the sum of 4k-n over k=0..n/2 is 0, which is what\n"
         "    these matrices realize and what this tool asserts.\n"
         "  - the stated Type I graph parameters V=2n, E=2n contradict the\n"
         "    stated valence (n-1)/2; the construction from the reduced\n"
         "    incidence matrix gives parts of size n-1 and (n-1)^2/2 edges,\n"
         "    as the worked n=5 example shows: (4,4;8).\n"
         "  - for the n=5 Type I design the published associate counts are\n"
         "    paired with the wrong lambdas; counting gives n=1 for lambda=0\n"
         "    and n=2 for lambda=1. The published n=4 Type II parameters\n"
         "    transpose the pairing the same way.\n"
         "  - the lambda classes form a full association scheme only for the\n"
         "    small orders (Type I 5, 7, 11, 13; Type II 4, 6, 10, 12 among\n"
         "    those tested); beyond them the triple counts depend on the\n"
         "    chosen pair and each such order is reported as a finding.\n";
  return failures;
}

}  // namespace mmat

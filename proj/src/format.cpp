#include "mmat/format.hpp"

#include <sstream>

namespace mmat {

namespace {

std::string render_matrix(const IntMatrix& m, const char* sep) {
  std::ostringstream out;
  for (Int i = 0; i < m.rows(); ++i) {
    for (Int j = 0; j < m.cols(); ++j) {
      if (j > 0) out << sep;
      out << m(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string render_matrix_text(const IntMatrix& m) {
  return render_matrix(m, " ");
}

std::string render_matrix_csv(const IntMatrix& m) {
  return render_matrix(m, ",");
}

std::string render_graph_dot(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (const auto& [a, c] : g.edges) {
    out << "  t" << a << " -- b" << (c - g.v) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_graph_text(const BipartiteGraph& g) {
  std::ostringstream out;
  const auto regularity = check_regular(g);
  out << "left " << g.v << " right " << g.b << " edges "
      << regularity.edge_count << '\n';
  out << "regular " << (regularity.is_regular ? "yes" : "no");
  if (regularity.is_regular) out << " degree " << regularity.degree;
  out << '\n';
  for (const auto& [a, c] : g.edges) out << a << " " << c << '\n';
  return out.str();
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json ortho_json(const OrthoReport& report) {
  Json j;
  j["schema"] = "mmat.ortho";
  j["schema_version"] = 1;
  j["n"] = report.n;
  j["type"] = to_string(report.mtype);
  j["theoretical"] = report.theoretical;
  Json realized = Json::array();
  for (const auto& [g, pairs] : report.realized) {
    Json entry;
    entry["g"] = g;
    Json pair_rows = Json::array();
    for (const auto& [a, b] : pairs) pair_rows.push_back({a, b});
    entry["pairs"] = std::move(pair_rows);
    realized.push_back(std::move(entry));
  }
  j["realized"] = std::move(realized);
  j["missing"] = report.missing;
  Json pairs = Json::array();
  for (const auto& [g1, g2] : report.pairs) pairs.push_back({g1, g2});
  j["orthogonal_pairs"] = std::move(pairs);
  j["trivial"]["self_product"] = report.trivial.self_product;
  if (report.trivial.first_row_product) {
    j["trivial"]["first_row_product"] = *report.trivial.first_row_product;
  }
  j["gram"] = matrix_json(report.gram);
  return j;
}

Json design_json(const PBIBDesign& d, const ValidationReport& validation) {
  Json j;
  j["schema"] = "mmat.design";
  j["schema_version"] = 1;
  j["n"] = d.incidence.n;
  j["type"] = to_string(d.incidence.mtype);
  j["v"] = d.v;
  j["b"] = d.b;
  j["r"] = d.r;
  j["k"] = d.k;
  j["incidence"] = matrix_json(d.incidence.cells);
  Json classes = Json::array();
  for (Int c = 0; c < d.scheme.m; ++c) {
    Json cls;
    cls["lambda"] = d.scheme.lambda_of[c];
    cls["n"] = d.scheme.n_of[c];
    cls["P"] = matrix_json(d.scheme.P[c]);
    classes.push_back(std::move(cls));
  }
  j["classes"] = std::move(classes);
  j["scheme_valid"] = d.scheme.valid;
  if (!d.scheme.valid) j["scheme_witness"] = d.scheme.failure_witness;
  Json checks = Json::array();
  for (const auto& c : validation.checks) {
    Json entry;
    entry["name"] = c.name;
    entry["lhs"] = c.lhs;
    entry["rhs"] = c.rhs;
    entry["pass"] = c.pass;
    if (!c.witness.empty()) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  j["validation"]["identities"] = std::move(checks);
  j["validation"]["pass"] = validation.pass;
  if (!validation.witness.empty()) j["validation"]["witness"] = validation.witness;
  return j;
}

Json graph_json(const BipartiteGraph& g) {
  const auto regularity = check_regular(g);
  Json j;
  j["schema"] = "mmat.graph";
  j["schema_version"] = 1;
  j["left_size"] = g.v;
  j["right_size"] = g.b;
  j["edge_count"] = regularity.edge_count;
  j["is_regular"] = regularity.is_regular;
  if (regularity.is_regular) j["degree"] = regularity.degree;
  Json edges = Json::array();
  for (const auto& [a, c] : g.edges) edges.push_back({a, c});
  j["edges"] = std::move(edges);
  return j;
}

std::string render_ortho_text(const OrthoReport& report, bool include_gram) {
  std::ostringstream out;
  out << "order " << report.n << " type " << to_string(report.mtype) << '\n';

  out << "theoretical spectrum:";
  for (Int g : report.theoretical) out << ' ' << g;
  out << '\n';

  out << "realized spectrum:\n";
  for (const auto& [g, pairs] : report.realized) {
    out << "  " << g << " <-";
    for (const auto& [a, b] : pairs) out << " (" << a << "," << b << ")";
    out << '\n';
  }

  out << "missing:";
  if (report.missing.empty()) out << " none";
  for (Int g : report.missing) out << ' ' << g;
  out << '\n';

  out << "orthogonal pairs:";
  for (const auto& [g1, g2] : report.pairs) {
    out << " (" << g1 << "," << g2 << ") sum " << g1 + g2;
  }
  out << '\n';

  out << "trivial: self " << report.trivial.self_product;
  if (report.trivial.first_row_product) {
    out << ", first row " << *report.trivial.first_row_product;
  }
  out << '\n';

  if (include_gram) {
    out << "gram:\n" << render_matrix_text(report.gram);
  }
  return out.str();
}

std::string render_design_text(const PBIBDesign& d,
                               const ValidationReport& validation) {
  std::ostringstream out;
  out << "order " << d.incidence.n << " type " << to_string(d.incidence.mtype)
      << '\n';
  out << "v " << d.v << " b " << d.b << " r " << d.r << " k " << d.k << '\n';
  out << "incidence:\n" << render_matrix_text(d.incidence.cells);
  for (Int c = 0; c < d.scheme.m; ++c) {
    out << "class " << c + 1 << ": lambda " << d.scheme.lambda_of[c] << " n "
        << d.scheme.n_of[c] << '\n';
    out << "P" << c + 1 << ":\n" << render_matrix_text(d.scheme.P[c]);
  }
  out << "scheme valid: " << (d.scheme.valid ? "yes" : "no") << '\n';
  if (!d.scheme.valid) out << "witness: " << d.scheme.failure_witness << '\n';
  for (const auto& c : validation.checks) {
    out << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  (" << c.lhs
        << " vs " << c.rhs << ")";
    if (!c.witness.empty()) out << "  [" << c.witness << "]";
    out << '\n';
  }
  out << "overall: " << (validation.pass ? "pass" : "FAIL") << '\n';
  return out.str();
}

}  // namespace mmat

#pragma once

// Stable renderings used by the CLI: plain text, CSV, DOT, and versioned
// JSON. Identical inputs produce byte-identical output.

#include <string>

#include <json.hpp>

#include "mmat/design.hpp"
#include "mmat/graph.hpp"
#include "mmat/ortho.hpp"

namespace mmat {

enum class OutputFormat { PlainText, Json, Csv, Dot };

// Rows on lines, entries space-separated, no trailing whitespace, final
// newline.
std::string render_matrix_text(const IntMatrix& m);
std::string render_matrix_csv(const IntMatrix& m);

// graph G { t1 -- b1; ... }, one edge per line, ordered by (treatment,
// block) index; vertices implicitly declared, no styling.
std::string render_graph_dot(const BipartiteGraph& g);
std::string render_graph_text(const BipartiteGraph& g);

using Json = nlohmann::ordered_json;

Json matrix_json(const IntMatrix& m);
Json ortho_json(const OrthoReport& report);
Json design_json(const PBIBDesign& d, const ValidationReport& validation);
Json graph_json(const BipartiteGraph& g);

std::string render_ortho_text(const OrthoReport& report, bool include_gram);
std::string render_design_text(const PBIBDesign& d,
                               const ValidationReport& validation);

}  // namespace mmat

// Command-line front end: generate matrices, analyze their orthogonality
// structure, extract and validate designs, export bipartite graphs, and
// re-verify the stated properties over a range of orders.
//
// Exit codes: 0 success, 1 I/O or internal failure (verify also uses 1 for
// assertion failures), 2 inadmissible order or bad request, 3 degenerate
// design, 4 design whose inferred scheme is invalid.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "mmat/format.hpp"
#include "mmat/modmat.hpp"
#include "verify.hpp"

namespace {

using namespace mmat;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitBadRequest = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitInvalidScheme = 4;

struct CommonOptions {
  Int n = 0;
  std::string type = "I";
  std::string format = "text";
  std::string out_path;
};

MatrixType parse_type(const std::string& s) {
  return s == "I" ? MatrixType::TypeI : MatrixType::TypeII;
}

// Writes to --out when given, stdout otherwise. Returns false on I/O failure.
bool emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return static_cast<bool>(std::cout);
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "cannot open " << out_path << " for writing\n";
    return false;
  }
  file << payload;
  file.close();
  if (!file) {
    std::cerr << "write to " << out_path << " failed\n";
    return false;
  }
  return true;
}

std::string json_payload(const Json& j) { return j.dump(2) + "\n"; }

int cmd_generate(const CommonOptions& opt, const std::string& stage,
                 const std::string& convention) {
  const MatrixType mtype = parse_type(opt.type);
  const auto base = base_matrix(opt.n, mtype);
  IntMatrix entries;
  if (stage == "base") {
    entries = base.entries;
  } else {
    entries = sign_matrix(base, convention == "flipped"
                                    ? SignConvention::Flipped
                                    : SignConvention::Standard)
                  .entries;
  }

  std::string payload;
  if (opt.format == "json") {
    Json j;
    j["schema"] = "mmat.matrix";
    j["schema_version"] = 1;
    j["n"] = opt.n;
    j["type"] = opt.type;
    j["stage"] = stage;
    if (stage == "sign") j["convention"] = convention;
    j["entries"] = matrix_json(entries);
    payload = json_payload(j);
  } else if (opt.format == "csv") {
    payload = render_matrix_csv(entries);
  } else {
    payload = render_matrix_text(entries);
  }
  return emit(opt.out_path, payload) ? kExitOk : kExitInternal;
}

int cmd_ortho(const CommonOptions& opt, bool include_gram) {
  const MatrixType mtype = parse_type(opt.type);
  const auto report = ortho_report(sign_matrix(base_matrix(opt.n, mtype)));
  std::string payload = opt.format == "json"
                            ? json_payload(ortho_json(report))
                            : render_ortho_text(report, include_gram);
  return emit(opt.out_path, payload) ? kExitOk : kExitInternal;
}

int cmd_design(const CommonOptions& opt) {
  const MatrixType mtype = parse_type(opt.type);
  const auto design = build_design(sign_matrix(base_matrix(opt.n, mtype)));
  const auto validation = validate_pbib(design);
  std::string payload = opt.format == "json"
                            ? json_payload(design_json(design, validation))
                            : render_design_text(design, validation);
  if (!emit(opt.out_path, payload)) return kExitInternal;
  return design.scheme.valid ? kExitOk : kExitInvalidScheme;
}

int cmd_graph(const CommonOptions& opt) {
  const MatrixType mtype = parse_type(opt.type);
  const auto g = bipartite_graph(incidence(sign_matrix(base_matrix(opt.n, mtype))));
  std::string payload;
  if (opt.format == "json") {
    payload = json_payload(graph_json(g));
  } else if (opt.format == "text") {
    payload = render_graph_text(g);
  } else {
    payload = render_graph_dot(g);
  }
  return emit(opt.out_path, payload) ? kExitOk : kExitInternal;
}

int cmd_verify(const std::string& type, Int min_order, Int max_order,
               const std::string& out_path) {
  std::ostringstream buffer;
  const int failures = run_verify(buffer, parse_type(type), min_order, max_order);
  if (!emit(out_path, buffer.str())) return kExitInternal;
  return failures == 0 ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular (1,-1) matrix families, their PBIB designs and graphs"};
  app.require_subcommand(1);

  const auto type_validator = CLI::IsMember({"I", "II"});

  CommonOptions opt;
  std::string stage = "sign";
  std::string convention = "standard";
  bool include_gram = false;
  Int min_order = 2;
  Int max_order = 0;

  auto add_common = [&](CLI::App* sub, std::initializer_list<const char*> formats) {
    sub->add_option("--n", opt.n, "order of the matrix")->required();
    sub->add_option("--type", opt.type, "family: I (n prime) or II (n+1 prime)")
        ->required()
        ->check(type_validator);
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember(std::vector<std::string>(formats.begin(),
                                                       formats.end())));
    sub->add_option("--out", opt.out_path, "write output to this path");
  };

  auto* generate = app.add_subcommand("generate", "print a base or sign matrix");
  add_common(generate, {"text", "json", "csv"});
  generate->add_option("--stage", stage, "base (integers) or sign (+1/-1)")
      ->check(CLI::IsMember({"base", "sign"}));
  generate->add_option("--convention", convention, "sign convention")
      ->check(CLI::IsMember({"standard", "flipped"}));

  auto* ortho = app.add_subcommand("ortho", "orthogonality structure report");
  add_common(ortho, {"text", "json"});
  ortho->add_flag("--gram", include_gram, "include the Gram matrix (text mode)");

  auto* design = app.add_subcommand("design", "extract and validate the design");
  add_common(design, {"text", "json"});

  auto* graph = app.add_subcommand("graph", "bipartite graph of the design");
  add_common(graph, {"dot", "json", "text"});

  auto* verify = app.add_subcommand("verify", "re-check stated properties");
  verify->add_option("--type", opt.type, "family: I or II")
      ->required()
      ->check(type_validator);
  verify->add_option("--min", min_order, "smallest order to check");
  verify->add_option("--max", max_order, "largest order to check")->required();
  verify->add_option("--out", opt.out_path, "write output to this path");

  // graph defaults to dot, everything else to text
  generate->callback([&] { if (generate->count("--format") == 0) opt.format = "text"; });
  ortho->callback([&] { if (ortho->count("--format") == 0) opt.format = "text"; });
  design->callback([&] { if (design->count("--format") == 0) opt.format = "text"; });
  graph->callback([&] { if (graph->count("--format") == 0) opt.format = "dot"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << '\n';
    return kExitBadRequest;
  }

  try {
    if (generate->parsed()) return cmd_generate(opt, stage, convention);
    if (ortho->parsed()) return cmd_ortho(opt, include_gram);
    if (design->parsed()) return cmd_design(opt);
    if (graph->parsed()) return cmd_graph(opt);
    if (verify->parsed()) return cmd_verify(opt.type, min_order, max_order,
                                            opt.out_path);
  } catch (const InadmissibleOrder& e) {
    std::cerr << e.what() << '\n';
    return kExitBadRequest;
  } catch (const DegenerateDesign& e) {
    std::cerr << e.what() << '\n';
    return kExitDegenerate;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitInternal;
  }
  return kExitBadRequest;
}

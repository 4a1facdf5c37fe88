#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "grh/parser.hpp"
#include "grh/theorems.hpp"

namespace {

using namespace grh;

// preset id, or a path to a preset file in the documented JSON format
RewriteSystem load_preset(const std::string& id_or_path) {
  for (PresetName p : all_presets()) {
    if (preset_id(p) == id_or_path) return build(p);
  }
  std::ifstream in(id_or_path);
  if (in) {
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return preset_from_json(text);
  }
  throw UnknownGenerator("unknown preset '" + id_or_path + "'");
}

int run_nf(const std::string& preset, const std::string& expr, long long steps) {
  RewriteSystem sys = load_preset(preset);
  if (steps > 0) sys.set_step_cap(steps);
  Element e = parse_element(expr, sys.alphabet());
  std::cout << normal_form(e, sys).str() << "\n";
  return 0;
}

int run_presets(const std::string& export_path) {
  if (!export_path.empty()) {
    std::ofstream out(export_path);
    if (!out) throw Error("IoError", "cannot write " + export_path);
    out << all_presets_to_json() << "\n";
    std::cout << "wrote " << export_path << "\n";
    return 0;
  }
  for (PresetName p : all_presets()) {
    const RewriteSystem& sys = build(p);
    std::cout << preset_id(p) << ": " << sys.label() << ", "
              << sys.alphabet()->size() << " generators, " << sys.rules().size()
              << " rules\n";
  }
  return 0;
}

int run_contract(const std::string& what) {
  if (what == "plane") {
    for (PresetName p : {PresetName::Aq, PresetName::AqDual}) {
      RewriteSystem sys = contract_plane(p, TransformSide::Left);
      std::cout << "# contraction of " << preset_id(p) << "\n";
      for (const auto& r : sys.rules())
        std::cout << word_str(*sys.alphabet(), r.pattern) << " -> "
                  << r.replacement.str() << "\n";
    }
    return 0;
  }
  if (what == "rmatrix") {
    std::cout << contract_r_matrix().grid_str();
    return 0;
  }
  if (what == "group") {
    RewriteSystem sys = derive_grh_via_similarity();
    for (const auto& r : sys.rules())
      std::cout << word_str(*sys.alphabet(), r.pattern) << " -> "
                << r.replacement.str() << "\n";
    return 0;
  }
  throw UnknownGenerator("contract expects plane, rmatrix, or group");
}

int run_verify(std::vector<std::string> names, const std::string& json_path,
               const std::string& convention) {
  ConventionChoice conv = ConventionChoice::Both;
  if (convention == "graded") conv = ConventionChoice::Graded;
  else if (convention == "ungraded") conv = ConventionChoice::Ungraded;
  else if (convention != "both")
    throw UnknownGenerator("convention must be graded, ungraded, or both");
  if (names.size() == 1 && names[0] == "all") names.clear();
  // reject unknown names before any computation
  auto known = check_names();
  for (const auto& n : names) {
    if (std::find(known.begin(), known.end(), n) == known.end())
      throw UnknownGenerator("unknown check '" + n + "'");
  }
  auto results = run_checks(names, conv);
  int passed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.convention_notes.empty()) std::cout << "  [" << r.convention_notes << "]";
    std::cout << "\n";
    if (!r.passed)
      for (const auto& w : r.witnesses) std::cout << "    " << w << "\n";
    if (r.passed) ++passed;
  }
  std::cout << passed << "/" << results.size() << " checks passed\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw Error("IoError", "cannot write " + json_path);
    out << report_to_json(results) << "\n";
  }
  return all_passed(results) ? 0 : 1;
}

int run_matrix(const std::string& name, bool at_q1, bool h0) {
  SuperMatrix m = build_matrix(matrix_from_id(name));
  if (h0) {
    const AlphabetPtr& a = m.alphabet();
    int h = a->index_of("h");
    if (h >= 0) {
      std::vector<std::optional<Element>> images(a->size());
      for (int i = 0; i < a->size(); ++i)
        images[i] = i == h ? Element::zero(a) : Element::letter(a, i);
      m = m.substituted(images);
    }
  }
  if (at_q1) m = m.limit_at_one();
  std::cout << m.grid_str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic engine for the h-deformed Grassmann supergroup Gr(1|1)"};
  app.require_subcommand(1);

  auto* nf = app.add_subcommand("nf", "normal form of an expression under a preset");
  std::string nf_preset, nf_expr;
  long long nf_steps = 0;
  nf->add_option("preset", nf_preset, "preset id or preset JSON file")->required();
  nf->add_option("expression", nf_expr, "expression to normalize")->required();
  nf->add_option("--steps", nf_steps, "rewrite step cap (default 1000000)");

  auto* presets = app.add_subcommand("presets", "list shipped presets");
  std::string export_path;
  presets->add_option("--export", export_path, "write all presets as JSON");

  auto* contract = app.add_subcommand("contract", "run a contraction computation");
  std::string contract_what;
  contract->add_option("what", contract_what, "plane | rmatrix | group")->required();

  auto* verify = app.add_subcommand("verify", "run verification checks");
  std::vector<std::string> check_args;
  std::string json_path, convention = "both";
  verify->add_option("checks", check_args, "check names, or 'all' (default)");
  verify->add_option("--json", json_path, "write the full JSON report here");
  verify->add_option("--convention", convention, "graded | ungraded | both");

  auto* matrix = app.add_subcommand("matrix", "print a named matrix");
  std::string matrix_name;
  bool at_q1 = false, h0 = false;
  matrix->add_option("name", matrix_name, "matrix name, e.g. R_q, R_h, G_h")->required();
  matrix->add_flag("--at-q1", at_q1, "evaluate every entry at q = 1");
  matrix->add_flag("--h0", h0, "substitute h -> 0 first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (nf->parsed()) return run_nf(nf_preset, nf_expr, nf_steps);
    if (presets->parsed()) return run_presets(export_path);
    if (contract->parsed()) return run_contract(contract_what);
    if (verify->parsed()) return run_verify(check_args, json_path, convention);
    if (matrix->parsed()) return run_matrix(matrix_name, at_q1, h0);
  } catch (const grh::UnknownGenerator& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const grh::SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const grh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

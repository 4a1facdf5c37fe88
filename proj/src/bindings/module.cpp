#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grh/parser.hpp"
#include "grh/theorems.hpp"

namespace py = pybind11;
using namespace grh;

namespace {

RewriteSystem preset_by_id(const std::string& id) { return build(preset_from_id(id)); }

ConventionChoice convention_from(const std::string& s) {
  if (s == "graded") return ConventionChoice::Graded;
  if (s == "ungraded") return ConventionChoice::Ungraded;
  if (s == "both") return ConventionChoice::Both;
  throw UnknownGenerator("convention must be graded, ungraded, or both");
}

py::dict result_to_dict(const CheckResult& r) {
  py::dict d;
  d["name"] = r.name;
  d["passed"] = r.passed;
  d["expected"] = r.expected == Expectation::Zero
                      ? "zero"
                      : (r.expected == Expectation::NonZero ? "nonzero" : "info");
  d["residual_summary"] = r.residual_summary;
  d["witnesses"] = r.witnesses;
  d["convention_notes"] = r.convention_notes;
  return d;
}

std::vector<std::vector<std::string>> matrix_grid(const std::string& name, bool at_q1,
                                                  bool h0) {
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
  std::vector<std::vector<std::string>> rows;
  for (int i = 1; i <= m.rows(); ++i) {
    std::vector<std::string> row;
    for (int j = 1; j <= m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_grh, m) {
  m.doc() = "Exact symbolic engine for the h-deformed Grassmann supergroup Gr(1|1)";

  py::register_exception<Error>(m, "EngineError");

  m.def("list_presets", [] {
    std::vector<std::string> out;
    for (PresetName p : all_presets()) out.push_back(preset_id(p));
    return out;
  });

  m.def(
      "normal_form",
      [](const std::string& preset, const std::string& expr, long long steps) {
        RewriteSystem sys = preset_by_id(preset);
        if (steps > 0) sys.set_step_cap(steps);
        return normal_form(parse_element(expr, sys.alphabet()), sys).str();
      },
      py::arg("preset"), py::arg("expression"), py::arg("steps") = 0,
      "Normal form of an expression under a preset, as canonical text.");

  m.def(
      "parse_print",
      [](const std::string& preset, const std::string& expr) {
        RewriteSystem sys = preset_by_id(preset);
        return parse_element(expr, sys.alphabet()).str();
      },
      py::arg("preset"), py::arg("expression"),
      "Parse in the free algebra (no relations applied) and print canonically.");

  m.def("preset_json",
        [](const std::string& preset) { return preset_to_json(preset_by_id(preset)); });
  m.def("all_presets_json", [] { return all_presets_to_json(); });

  m.def("matrix_names", [] {
    std::vector<std::string> out;
    for (MatrixName n : all_matrices()) out.push_back(matrix_id(n));
    return out;
  });
  m.def("matrix", &matrix_grid, py::arg("name"), py::arg("at_q1") = false,
        py::arg("h0") = false, "Entries of a named matrix as printed text.");

  m.def(
      "contracted_plane_relations",
      [](const std::string& source) {
        RewriteSystem sys = contract_plane(preset_from_id(source), TransformSide::Left);
        std::vector<std::string> out;
        for (const auto& r : sys.rules())
          out.push_back(word_str(*sys.alphabet(), r.pattern) + " -> " +
                        r.replacement.str());
        return out;
      },
      py::arg("source"), "Contraction of aq or aqdual as oriented rules.");

  m.def("similarity_relations", [] {
    RewriteSystem sys = derive_grh_via_similarity();
    std::vector<std::string> out;
    for (const auto& r : sys.rules())
      out.push_back(word_str(*sys.alphabet(), r.pattern) + " -> " + r.replacement.str());
    return out;
  });

  m.def("check_names", &check_names);
  m.def(
      "verify",
      [](const std::vector<std::string>& names, const std::string& convention) {
        auto results = run_checks(names, convention_from(convention));
        py::list out;
        for (const auto& r : results) out.append(result_to_dict(r));
        return out;
      },
      py::arg("names") = std::vector<std::string>{}, py::arg("convention") = "both",
      "Run verification checks (all when names is empty).");

  m.def(
      "verify_report_json",
      [](const std::vector<std::string>& names, const std::string& convention) {
        return report_to_json(run_checks(names, convention_from(convention)));
      },
      py::arg("names") = std::vector<std::string>{}, py::arg("convention") = "both");
}

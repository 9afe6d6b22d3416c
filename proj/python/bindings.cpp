// Python bindings. Structured results cross the boundary as JSON text and are
// decoded by the pure-Python wrapper in finann/__init__.py.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "finann/catalog.hpp"
#include "finann/classify.hpp"
#include "finann/covering.hpp"
#include "finann/error.hpp"
#include "finann/group_structure.hpp"
#include "finann/report_json.hpp"
#include "finann/smith.hpp"
#include "finann/witness.hpp"

namespace py = pybind11;
using namespace finann;

namespace {

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string analyze(const std::string& text, const std::string& hint_text, std::size_t nfa) {
  const auto p = parse_presentation(text);
  const Hint hint = parse_hint(hint_text);
  const auto inv = abelian_invariants(p);
  auto out = verdict_json(p, hint, classify_fa(p, hint), inv);
  if (nfa > 0) {
    const auto v = classify_nfa(p, nfa, hint);
    out["nfa"] = Json{{"n", nfa}, {"verdict", std::string(to_string(v.status))}, {"rule", v.rule}};
  }
  return out.dump();
}

std::string smith(const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  std::vector<long long> flat;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::InvalidArgument, "matrix rows have different lengths");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  const auto res = smith_normal_form(IntMatrix(r, c, flat));
  return Json{{"d", matrix_json(res.d)}, {"u", matrix_json(res.u)}, {"v", matrix_json(res.v)}}.dump();
}

std::string finite_report(const std::string& spec, std::size_t n) {
  const auto g = group_from_spec(spec);
  auto out = cover_json(n <= 1 ? is_fa_finite(g) : is_nfa_finite(g, n));
  out["order"] = g.order();
  out["abelianisation"] = invariants_json(abelianisation_invariants(g));
  return out.dump();
}

std::string witness(const std::string& text, const std::string& word, std::size_t bound) {
  const auto p = parse_presentation(text);
  const auto found = find_annihilator(p, parse_word(p, word), bound);
  return found ? witness_json(*found).dump() : "null";
}

std::string quotient_report(const std::string& text, std::size_t bound) {
  const auto found = nontrivial_quotient_exists(parse_presentation(text), bound);
  return found ? witness_json(*found).dump() : "null";
}

std::vector<std::string> catalog_names(const std::string& spec_text) {
  const auto spec = spec_text.empty() ? CatalogSpec::default_spec() : CatalogSpec::parse(spec_text);
  std::vector<std::string> out;
  for (const auto& g : build_catalog(spec)) out.push_back(g.name());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Annihilation properties of finitely presented and finite groups";

  // Messages keep the "Code: message" form used by the CLI.
  py::register_exception<Error>(m, "FinannError", PyExc_ValueError);

  m.def("analyze", &analyze, py::arg("presentation"), py::arg("hint") = "none", py::arg("nfa") = 0);
  m.def(
      "abelian_invariants",
      [](const std::string& text) { return invariants_json(abelian_invariants(parse_presentation(text))).dump(); },
      py::arg("presentation"));
  m.def("smith_normal_form", &smith, py::arg("rows"));
  m.def("finite", &finite_report, py::arg("spec"), py::arg("n") = 1);
  m.def(
      "weight",
      [](const std::string& spec) {
        const auto g = group_from_spec(spec);
        return weight_json(g, weight_bruteforce(g)).dump();
      },
      py::arg("spec"));
  m.def(
      "verify_group",
      [](const std::string& spec) { return theorem_checks_json(verify_finite_theorems(group_from_spec(spec))).dump(); },
      py::arg("spec"));
  m.def("witness", &witness, py::arg("presentation"), py::arg("word"), py::arg("bound"));
  m.def("quotient", &quotient_report, py::arg("presentation"), py::arg("bound"));
  m.def(
      "scan",
      [](const std::string& text, std::size_t length, std::size_t bound) {
        return scan_json(fa_scan(parse_presentation(text), length, bound)).dump();
      },
      py::arg("presentation"), py::arg("length"), py::arg("bound"));
  m.def("catalog_names", &catalog_names, py::arg("spec") = "");
}

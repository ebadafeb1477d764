// Thin JSON-in/JSON-out layer; the Python package decodes the strings.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "borel_rees/catalog.hpp"
#include "borel_rees/io.hpp"
#include "borel_rees/orders.hpp"
#include "borel_rees/text.hpp"
#include "borel_rees/verifier.hpp"

namespace py = pybind11;
using namespace borel_rees;

namespace {

Presentation pres_of(const std::string& spec_json) { return make_presentation(parse_spec(spec_json)); }

std::vector<Exponent> budget_of(const Presentation& pres, std::vector<Exponent> budget) {
  if (budget.size() == 1 && pres.num_ideals() > 1) budget.assign(pres.num_ideals(), budget[0]);
  if (budget.size() != pres.num_ideals()) {
    throw Error("t-budget has " + std::to_string(budget.size()) + " entries for " +
                std::to_string(pres.num_ideals()) + " ideals");
  }
  return budget;
}

std::string closure(const std::string& spec_json) {
  Presentation pres = pres_of(spec_json);
  Json out = Json::array();
  for (std::size_t i = 0; i < pres.num_ideals(); ++i) {
    const auto& I = pres.ideal(i);
    Json gens = Json::array();
    for (const Monomial& g : I.minimal_generators()) gens.push_back(format_monomial(g));
    out.push_back({{"degree", I.degree()}, {"minimal_generators", gens}});
  }
  return out.dump();
}

std::string fiber_graph(const std::string& spec_json, const std::string& multidegree, const std::string& basis_name) {
  Presentation pres = pres_of(spec_json);
  MultiDegree mu = parse_multidegree(multidegree, pres.ambient_vars(), pres.num_ideals());
  auto basis = build_named_basis(pres, basis_name);
  auto g = build_fiber_graph(pres.enumerate_fiber(mu), ReductionSystem<PresMonomial>(basis));
  GraphAnalysis a = analyze(g);
  Json vertices = Json::array(), edges = Json::array();
  for (const auto& v : g.vertices) vertices.push_back(format_pres(pres, v));
  for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"rules", e.rules}});
  return Json{{"vertices", vertices}, {"edges", edges}, {"sinks", a.sinks}, {"has_cycle", a.has_cycle}}.dump();
}

std::string verify(const std::string& spec_json, const std::vector<Exponent>& budget, const std::string& basis_name,
                   std::size_t jobs) {
  Presentation pres = pres_of(spec_json);
  auto b = budget_of(pres, budget);
  VerificationReport report;
  {
    py::gil_scoped_release release;
    VerifyOptions opts;
    opts.jobs = jobs;
    report = verify_gb(pres, build_named_basis(pres, basis_name), b, opts);
  }
  report.basis = basis_name;
  return report_to_json(pres, report).dump();
}

std::string obstructions(const std::string& spec_json, const std::vector<Exponent>& budget, std::size_t jobs) {
  Presentation pres = pres_of(spec_json);
  auto b = budget_of(pres, budget);
  std::vector<ObstructionWitness> ws;
  {
    py::gil_scoped_release release;
    ws = detect_obstructions(pres, b, jobs);
  }
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(witness_to_json(pres, w));
  return out.dump();
}

std::string koszul(const std::string& spec_json, const std::vector<Exponent>& budget, std::size_t jobs) {
  Presentation pres = pres_of(spec_json);
  auto b = budget_of(pres, budget);
  KoszulReport r;
  {
    py::gil_scoped_release release;
    r = koszul_report(pres, b, jobs);
  }
  Json j = koszul_to_json(pres, r);
  j["exit_code"] = exit_code(r.verdict);
  return j.dump();
}

py::dict gate(const std::vector<int>& g, const std::vector<int>& d) {
  GateResult r = parameter_gate(g, d);
  py::dict out;
  out["case"] = gate_case_name(r.verdict);
  out["possibly_koszul"] = r.possibly_koszul();
  out["sorted"] = r.sorted;
  return out;
}

std::string run_example(const std::string& name, int a, int b, int c, std::size_t jobs) {
  catalog::Params p{a, b, c};
  py::gil_scoped_release release;
  return catalog::run(name, p, jobs);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  // Translators run newest first, so the subclass goes last.
  auto& error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  m.def("closure", &closure, py::arg("spec"));
  m.def("fiber_graph", &fiber_graph, py::arg("spec"), py::arg("multidegree"), py::arg("basis"));
  m.def("verify", &verify, py::arg("spec"), py::arg("budget"), py::arg("basis"), py::arg("jobs") = 1);
  m.def("obstructions", &obstructions, py::arg("spec"), py::arg("budget"), py::arg("jobs") = 1);
  m.def("koszul_report", &koszul, py::arg("spec"), py::arg("budget"), py::arg("jobs") = 1);
  m.def("parameter_gate", &gate, py::arg("g"), py::arg("d"));
  m.def("example_names", &catalog::names);
  m.def("run_example", &run_example, py::arg("name"), py::arg("a") = 0, py::arg("b") = 0, py::arg("c") = 0,
        py::arg("jobs") = 1);
}

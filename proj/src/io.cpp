#include "borel_rees/io.hpp"

#include <fstream>
#include <sstream>

namespace borel_rees {

IdealSpec parse_spec(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("ideal spec is not valid JSON: ") + e.what());
  }
  IdealSpec spec;
  try {
    long n = j.at("n").get<long>();
    if (n < 1) throw Error("ideal spec: n must be positive");
    spec.n = static_cast<std::size_t>(n);
    const Json& ideals = j.at("ideals");
    if (!ideals.is_array() || ideals.empty()) throw Error("ideal spec: \"ideals\" must be a non-empty array");
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      std::vector<Monomial> gens;
      for (const Json& g : ideals[i].at("borel_generators")) {
        try {
          if (g.is_array()) {
            gens.emplace_back(g.get<std::vector<Exponent>>());
            if (gens.back().num_vars() != spec.n) throw Error("exponent vector has the wrong length");
          } else {
            gens.push_back(parse_monomial(g.get<std::string>(), spec.n));
          }
        } catch (const Error& e) {
          throw Error("ideal " + std::to_string(i + 1) + ": " + e.what());
        }
      }
      spec.borel_generators.push_back(std::move(gens));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("ideal spec: ") + e.what());
  }
  return spec;
}

IdealSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

Presentation make_presentation(const IdealSpec& spec) {
  return Presentation(validate_collection(spec.borel_generators, spec.n));
}

Json spec_to_json(const Presentation& pres) {
  Json j;
  j["n"] = pres.ambient_vars();
  Json ideals = Json::array();
  for (const auto& I : pres.ideals()) {
    Json gens = Json::array();
    for (const Monomial& g : I.borel_generators()) {
      gens.push_back(std::vector<Exponent>(g.exponents().begin(), g.exponents().end()));
    }
    ideals.push_back({{"borel_generators", gens},
                      {"degree", I.degree()},
                      {"minimal_generators", I.minimal_generators().size()}});
  }
  j["ideals"] = ideals;
  return j;
}

namespace {

Json multidegree_json(const MultiDegree& mu) {
  return {{"text", format_multidegree(mu)},
          {"x", std::vector<Exponent>(mu.x.exponents().begin(), mu.x.exponents().end())},
          {"t", mu.t}};
}

}  // namespace

Json report_to_json(const Presentation& pres, const VerificationReport& report) {
  Json j = spec_to_json(pres);
  j["basis"] = report.basis;
  j["basis_size"] = report.basis_size;
  j["t_budget"] = report.t_budget;
  j["multidegrees_checked"] = report.multidegrees_checked;
  j["largest_fiber"] = report.largest_fiber;
  Json failures = Json::array();
  for (const FiberFailure& f : report.failures) {
    Json sinks = Json::array();
    for (const PresMonomial& s : f.sinks) sinks.push_back(format_pres(pres, s));
    failures.push_back({{"multidegree", multidegree_json(f.mu)},
                        {"vertices", f.vertices},
                        {"sinks", sinks},
                        {"has_cycle", f.has_cycle}});
  }
  j["failures"] = failures;
  j["oracle_binomials_checked"] = report.oracle_binomials_checked;
  j["oracle_failures"] = report.oracle_failures;
  j["verdict"] = report.certified() ? "certified-up-to-bound" : "refuted";
  return j;
}

Json witness_to_json(const Presentation& pres, const ObstructionWitness& w) {
  Json comps = Json::array();
  for (const auto& comp : w.components) {
    Json c = Json::array();
    for (const PresMonomial& v : comp) c.push_back(format_pres(pres, v));
    comps.push_back(c);
  }
  return {{"multidegree", multidegree_json(w.mu)}, {"components", comps}};
}

Json koszul_to_json(const Presentation& pres, const KoszulReport& report) {
  Json j = spec_to_json(pres);
  Json sorted = Json::array();
  for (auto [g, d] : report.gate.sorted) sorted.push_back({{"g", g}, {"d", d}});
  j["gate"] = {{"parameters", sorted}, {"case", gate_case_name(report.gate.verdict)}};
  j["verification"] =
      report.verification ? report_to_json(pres, *report.verification) : Json(nullptr);
  Json ws = Json::array();
  for (const auto& w : report.witnesses) ws.push_back(witness_to_json(pres, w));
  j["obstructions"] = ws;
  j["verdict"] = verdict_name(report.verdict);
  j["explanation"] = report.explanation;
  return j;
}

namespace {

template <class Fmt, class B>
std::string jsonl(const std::vector<B>& basis, Fmt fmt) {
  std::string out;
  for (const auto& b : basis) {
    Json j{{"lead", fmt(b.lead)}, {"trail", fmt(b.trail)}, {"source", source_name(b.source)}};
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace

std::string basis_jsonl(const Presentation& pres, const std::vector<PresBinomial>& basis) {
  return jsonl(basis, [&](const PresMonomial& u) { return format_pres(pres, u); });
}

std::string basis_jsonl(const Presentation& pres, const std::vector<MixedBinomial>& basis) {
  return jsonl(basis, [&](const MixedMonomial& u) { return format_mixed(pres, u); });
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace borel_rees

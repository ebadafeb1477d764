#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "borel_rees/presentation.hpp"
#include "borel_rees/reduction.hpp"
#include "borel_rees/text.hpp"
#include "borel_rees/verifier.hpp"

namespace borel_rees {

using Json = nlohmann::ordered_json;

/// {"n": 6, "ideals": [{"borel_generators": ["x4*x5", "x2*x6"]}, ...]}
struct IdealSpec {
  std::size_t n = 0;
  std::vector<std::vector<Monomial>> borel_generators;
};

IdealSpec parse_spec(std::string_view json_text);
IdealSpec load_spec(const std::string& path);
Presentation make_presentation(const IdealSpec& spec);

Json spec_to_json(const Presentation& pres);
Json report_to_json(const Presentation& pres, const VerificationReport& report);
Json witness_to_json(const Presentation& pres, const ObstructionWitness& w);
Json koszul_to_json(const Presentation& pres, const KoszulReport& report);

/// One {"lead", "trail", "source"} object per line.
std::string basis_jsonl(const Presentation& pres, const std::vector<PresBinomial>& basis);
std::string basis_jsonl(const Presentation& pres, const std::vector<MixedBinomial>& basis);

std::string dot_escape(std::string_view s);

/// Graphviz text: sinks drawn doubled and filled, edges labelled "lead -> trail".
template <class Mono, class Fmt>
std::string to_dot(const ReductionGraph<Mono>& g, const std::vector<MarkedBinomial<Mono>>& rules,
                   Fmt fmt, const std::string& name = "fiber") {
  std::string out = "digraph \"" + dot_escape(name) + "\" {\n  rankdir=TB;\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    out += "  v" + std::to_string(v) + " [label=\"" + dot_escape(fmt(g.vertices[v])) + "\"";
    if (g.out[v].empty()) out += ", shape=doublecircle, style=filled, fillcolor=lightgrey";
    out += "];\n";
  }
  for (const GraphEdge& e : g.edges) {
    std::string label;
    for (std::size_t r : e.rules) {
      if (!label.empty()) label += "; ";
      label += fmt(rules[r].lead) + " -> " + fmt(rules[r].trail);
    }
    out += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) + " [label=\"" +
           dot_escape(label) + "\"];\n";
  }
  return out + "}\n";
}

}  // namespace borel_rees

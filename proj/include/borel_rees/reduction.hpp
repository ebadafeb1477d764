#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "borel_rees/monomial.hpp"
#include "borel_rees/presentation.hpp"

namespace borel_rees {

/// Which construction produced a marked binomial.
enum class BasisSource { Plain, G1, G2, G3, Syzygy };

const char* source_name(BasisSource s);

template <class Mono>
struct MarkedBinomial {
  Mono lead;
  Mono trail;
  BasisSource source = BasisSource::Plain;
  bool operator==(const MarkedBinomial&) const = default;
};

template <class Mono>
struct MonoHash;
template <>
struct MonoHash<Monomial> : MonomialHash {};
template <>
struct MonoHash<PresMonomial> : PresMonomialHash {};
template <>
struct MonoHash<MixedMonomial> : MixedMonomialHash {};

/// Raised by normal_form when the step budget runs out (a cycle, in practice).
class StepLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A fixed list of marked binomials with a cheap support prefilter.
template <class Mono>
class ReductionSystem {
 public:
  ReductionSystem() = default;
  explicit ReductionSystem(std::vector<MarkedBinomial<Mono>> rules) : rules_(std::move(rules)) {
    masks_.reserve(rules_.size());
    for (const auto& r : rules_) masks_.push_back(support_mask(r.lead));
  }

  const std::vector<MarkedBinomial<Mono>>& rules() const { return rules_; }
  const MarkedBinomial<Mono>& rule(std::size_t i) const { return rules_.at(i); }
  std::size_t size() const { return rules_.size(); }

  bool applies(std::size_t i, const Mono& v, std::uint64_t v_mask) const {
    return (masks_[i] & ~v_mask) == 0 && divides(rules_[i].lead, v);
  }

  Mono apply(std::size_t i, const Mono& v) const {
    return multiply(quotient(v, rules_[i].lead), rules_[i].trail);
  }

  /// (successor, rule index) for every rule whose lead divides v, in rule order.
  std::vector<std::pair<Mono, std::size_t>> applicable(const Mono& v) const {
    std::vector<std::pair<Mono, std::size_t>> out;
    const std::uint64_t mask = support_mask(v);
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (applies(i, v, mask)) out.emplace_back(apply(i, v), i);
    }
    return out;
  }

  std::optional<std::size_t> first_applicable(const Mono& v) const {
    const std::uint64_t mask = support_mask(v);
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (applies(i, v, mask)) return i;
    }
    return std::nullopt;
  }

 private:
  std::vector<MarkedBinomial<Mono>> rules_;
  std::vector<std::uint64_t> masks_;
};

template <class Mono>
std::vector<std::pair<Mono, std::size_t>> applicable_reductions(
    const Mono& v, const std::vector<MarkedBinomial<Mono>>& rules) {
  return ReductionSystem<Mono>(rules).applicable(v);
}

struct GraphEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  /// Every rule producing this edge, ascending.
  std::vector<std::size_t> rules;
};

struct GraphAnalysis {
  std::vector<std::size_t> sinks;
  bool has_cycle = false;
  bool unique_sink_acyclic() const { return sinks.size() == 1 && !has_cycle; }
};

template <class Mono>
struct ReductionGraph {
  std::vector<Mono> vertices;
  std::vector<GraphEdge> edges;
  /// Edge indices leaving each vertex.
  std::vector<std::vector<std::size_t>> out;

  std::optional<std::size_t> index_of(const Mono& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Internal helpers for the builders below.
  std::size_t add_vertex(const Mono& v) {
    auto [it, inserted] = index_.try_emplace(v, vertices.size());
    if (inserted) {
      vertices.push_back(v);
      out.emplace_back();
    }
    return it->second;
  }
  void add_edge(std::size_t from, std::size_t to, std::size_t rule) {
    for (std::size_t e : out[from]) {
      if (edges[e].to == to) {
        edges[e].rules.push_back(rule);
        return;
      }
    }
    out[from].push_back(edges.size());
    edges.push_back({from, to, {rule}});
  }

 private:
  std::unordered_map<Mono, std::size_t, MonoHash<Mono>> index_;
};

/// Everything reachable from `start` by one-step reductions (breadth-first
/// discovery order; the start is vertex 0).
template <class Mono>
ReductionGraph<Mono> build_closure_graph(const Mono& start, const ReductionSystem<Mono>& sys) {
  ReductionGraph<Mono> g;
  g.add_vertex(start);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    Mono v = g.vertices[i];
    for (auto& [w, rule] : sys.applicable(v)) {
      std::size_t j = g.add_vertex(w);
      g.add_edge(i, j, rule);
    }
  }
  return g;
}

/// The fiber graph on the given vertex list. Throws Error if a reduction
/// leaves the list (the rules are not degree-preserving on it).
template <class Mono>
ReductionGraph<Mono> build_fiber_graph(const std::vector<Mono>& fiber,
                                       const ReductionSystem<Mono>& sys) {
  ReductionGraph<Mono> g;
  for (const Mono& v : fiber) g.add_vertex(v);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (auto& [w, rule] : sys.applicable(g.vertices[i])) {
      auto j = g.index_of(w);
      if (!j) throw Error("reduction leaves the fiber");
      g.add_edge(i, *j, rule);
    }
  }
  return g;
}

/// Sinks (out-degree 0) and a three-colour depth-first cycle check.
template <class Mono>
GraphAnalysis analyze(const ReductionGraph<Mono>& g) {
  GraphAnalysis a;
  const std::size_t n = g.vertices.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (g.out[v].empty()) a.sinks.push_back(v);
  }
  enum : unsigned char { White, Grey, Black };
  std::vector<unsigned char> colour(n, White);
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (vertex, next edge slot)
  for (std::size_t root = 0; root < n && !a.has_cycle; ++root) {
    if (colour[root] != White) continue;
    colour[root] = Grey;
    stack.push_back({root, 0});
    while (!stack.empty() && !a.has_cycle) {
      auto& [v, slot] = stack.back();
      if (slot == g.out[v].size()) {
        colour[v] = Black;
        stack.pop_back();
        continue;
      }
      std::size_t w = g.edges[g.out[v][slot++]].to;
      if (colour[w] == Grey) {
        a.has_cycle = true;
      } else if (colour[w] == White) {
        colour[w] = Grey;
        stack.push_back({w, 0});
      }
    }
  }
  return a;
}

/// Longest path length from every vertex to the sink. Throws Error unless the
/// graph is acyclic with exactly one sink.
template <class Mono>
std::vector<std::size_t> ell_max_all(const ReductionGraph<Mono>& g) {
  GraphAnalysis a = analyze(g);
  if (a.has_cycle) throw Error("longest path requested on a cyclic graph");
  if (a.sinks.size() != 1) throw Error("longest path needs exactly one sink");
  const std::size_t n = g.vertices.size();
  // Kahn order on reversed edges: a vertex is final once all successors are.
  std::vector<std::size_t> pending(n, 0);
  std::vector<std::vector<std::size_t>> preds(n);
  for (const GraphEdge& e : g.edges) {
    ++pending[e.from];
    preds[e.to].push_back(e.from);
  }
  std::vector<std::size_t> len(n, 0);
  std::vector<std::size_t> ready = a.sinks;
  while (!ready.empty()) {
    std::size_t w = ready.back();
    ready.pop_back();
    for (std::size_t v : preds[w]) {
      len[v] = std::max(len[v], len[w] + 1);
      if (--pending[v] == 0) ready.push_back(v);
    }
  }
  return len;
}

template <class Mono>
std::size_t ell_max(const ReductionGraph<Mono>& g, std::size_t vertex) {
  return ell_max_all(g).at(vertex);
}

/// Repeatedly applies the first applicable rule. Throws StepLimitExceeded
/// after `step_limit` steps.
template <class Mono>
Mono normal_form(Mono v, const ReductionSystem<Mono>& sys, std::size_t step_limit) {
  for (std::size_t steps = 0;; ++steps) {
    auto rule = sys.first_applicable(v);
    if (!rule) return v;
    if (steps == step_limit) {
      throw StepLimitExceeded("normal form did not terminate within " +
                              std::to_string(step_limit) + " steps");
    }
    v = sys.apply(*rule, v);
  }
}

/// |fiber|^2 + 16, unless BOREL_REES_STEP_LIMIT is set to a positive integer.
std::size_t default_step_limit(std::size_t fiber_size);

/// Sum over the x-variables x_q of m (with multiplicity) of the content
/// exponents of u strictly after q.
Exponent o_invariant(const MixedMonomial& mu, const Presentation& pres);

}  // namespace borel_rees

#include "borel_rees/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "borel_rees/orders.hpp"
#include "borel_rees/verifier.hpp"

namespace borel_rees::catalog {

namespace {

Monomial mono(const std::string& text, std::size_t n) { return parse_monomial(text, n); }

// text * x_n^power
Monomial shifted(const std::string& text, std::size_t n, int power) {
  return multiply(mono(text, n), Monomial::variable(n, n - 1, power));
}

MarkedBinomial<Monomial> rule(const std::string& lead, const std::string& trail, std::size_t n) {
  return {mono(lead, n), mono(trail, n), BasisSource::Plain};
}

std::string ideal_label(const StronglyStableIdeal& I) {
  std::string out = "B(";
  for (std::size_t k = 0; k < I.borel_generators().size(); ++k) {
    if (k) out += ", ";
    out += format_monomial(I.borel_generators()[k]);
  }
  return out + ")";
}

std::string ideals_label(const Presentation& pres) {
  std::string out;
  for (std::size_t i = 0; i < pres.num_ideals(); ++i) {
    if (i) out += " + ";
    out += ideal_label(pres.ideal(i));
  }
  return out + " in " + std::to_string(pres.ambient_vars()) + " variables";
}

std::string budget_label(std::span<const Exponent> t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out;
}

template <class Mono, class Fmt>
void describe_graph(std::ostream& os, const ReductionGraph<Mono>& g,
                    const std::vector<MarkedBinomial<Mono>>& rules, Fmt fmt) {
  GraphAnalysis a = analyze(g);
  std::vector<std::size_t> lengths;
  if (a.unique_sink_acyclic()) lengths = ell_max_all(g);
  os << "vertices: " << g.vertices.size() << "\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    os << "  [" << v << "] " << fmt(g.vertices[v]);
    if (!lengths.empty()) os << "  (ell_max " << lengths[v] << ")";
    os << "\n";
  }
  os << "edges: " << g.edges.size() << "\n";
  for (const GraphEdge& e : g.edges) {
    os << "  [" << e.from << "] -> [" << e.to << "] by ";
    for (std::size_t k = 0; k < e.rules.size(); ++k) {
      if (k) os << "; ";
      os << fmt(rules[e.rules[k]].lead) << " -> " << fmt(rules[e.rules[k]].trail);
    }
    os << "\n";
  }
  os << "sinks: " << a.sinks.size() << "\n";
  for (std::size_t s : a.sinks) os << "  " << fmt(g.vertices[s]) << "\n";
  os << "cycles: " << (a.has_cycle ? "yes" : "no") << "\n";
  if (a.unique_sink_acyclic()) {
    os << "verdict: unique sink, acyclic\n";
  } else if (a.has_cycle && a.sinks.empty()) {
    os << "verdict: cycles and no sink, the reduction relation is not Noetherian\n";
  } else {
    os << "verdict: not a Groebner basis for this marking (" << a.sinks.size() << " sinks"
       << (a.has_cycle ? ", cycles" : "") << ")\n";
  }
}

std::string run_plain(const std::string& name) {
  PlainExample ex = plain_example(name);
  ReductionSystem<Monomial> sys(ex.rules);
  auto g = build_closure_graph(ex.start, sys);
  std::ostringstream os;
  os << name << ": directed graph of " << format_monomial(ex.start) << "\n";
  os << "rules:\n";
  for (const auto& r : ex.rules) {
    os << "  " << format_monomial(r.lead) << " -> " << format_monomial(r.trail) << "\n";
  }
  describe_graph(os, g, ex.rules, [](const Monomial& m) { return format_monomial(m); });
  return os.str();
}

std::string run_fiber(const std::string& name, const IdealSpec& spec, const MultiDegree& mu,
                      bool head_tail) {
  Presentation pres = make_presentation(spec);
  std::vector<PresBinomial> basis = head_tail ? build_ht_basis(pres) : build_G1(pres, 0);
  ReductionSystem<PresMonomial> sys(basis);
  auto g = build_fiber_graph(pres.enumerate_fiber(mu), sys);
  std::ostringstream os;
  os << name << ": fiber graph of " << ideals_label(pres) << " at " << format_multidegree(mu)
     << " under " << (head_tail ? "G1+G2+G3 (head-and-tail order)" : "G1 (rlex order)") << "\n";
  describe_graph(os, g, basis, [&](const PresMonomial& u) { return format_pres(pres, u); });
  return os.str();
}

std::string run_obstruction(const std::string& name, const Params& p, std::size_t jobs) {
  ObstructionExample ex = obstruction_example(name, p);
  Presentation pres = make_presentation(ex.spec);
  auto fmt = [&](const PresMonomial& u) { return format_pres(pres, u); };
  PresMonomial lhs = factors_to_pres(pres, ex.lhs);
  PresMonomial rhs = factors_to_pres(pres, ex.rhs);
  auto comps = quadratic_move_components(pres, ex.mu);
  auto component_of = [&](const PresMonomial& u) -> std::size_t {
    for (std::size_t k = 0; k < comps.size(); ++k) {
      if (std::find(comps[k].begin(), comps[k].end(), u) != comps[k].end()) return k;
    }
    throw Error("monomial is not in the fiber");
  };
  std::ostringstream os;
  os << name << " (a=" << p.a << ", b=" << p.b << ", c=" << p.c << "): " << ideals_label(pres)
     << "\n";
  os << "multidegree: " << format_multidegree(ex.mu) << "\n";
  std::size_t total = 0;
  for (const auto& c : comps) total += c.size();
  os << "fiber: " << total << " monomials, " << comps.size()
     << " components under quadratic moves\n";
  for (std::size_t k = 0; k < comps.size(); ++k) {
    os << "  component " << k + 1 << ":";
    for (const auto& u : comps[k]) os << " " << fmt(u);
    os << "\n";
  }
  std::size_t cl = component_of(lhs);
  std::size_t cr = component_of(rhs);
  os << "syzygy: " << fmt(lhs) << " = " << fmt(rhs) << " -> "
     << (cl != cr ? "different components (minimal cubic generator)" : "same component") << "\n";
  auto witnesses = detect_obstructions(pres, ex.t_budget, jobs);
  bool found = std::any_of(witnesses.begin(), witnesses.end(),
                           [&](const ObstructionWitness& w) { return w.mu == ex.mu; });
  os << "obstructions within t-budget " << budget_label(ex.t_budget) << ": " << witnesses.size()
     << (found ? " (including this multidegree)" : "") << "\n";
  return os.str();
}

std::string describe_report(const VerificationReport& r) {
  std::ostringstream os;
  os << "basis size: " << r.basis_size << "\n";
  os << "multidegrees checked: " << r.multidegrees_checked << "\n";
  os << "largest fiber: " << r.largest_fiber << "\n";
  os << "failures: " << r.failures.size() << "\n";
  os << "verdict: " << (r.certified() ? "certified-up-to-bound" : "refuted") << "\n";
  return os.str();
}

std::string run_certification(const std::string& name, std::size_t jobs) {
  std::ostringstream os;
  VerifyOptions opts;
  opts.jobs = jobs;
  if (name == "single-pair-rlex" || name == "single-pair-mrlex") {
    Presentation pres = make_presentation(single_pair_spec());
    bool g1 = name == "single-pair-rlex";
    std::vector<Exponent> budget{4};
    auto basis = g1 ? build_G1(pres, 0) : build_G2(pres, 0);
    os << name << ": " << (g1 ? "G1" : "G2") << " of " << ideals_label(pres) << ", t-budget 4\n";
    os << describe_report(verify_gb(pres, basis, budget, opts));
  } else if (name == "running-pair-ht") {
    Presentation pres = make_presentation(running_pair_spec());
    std::vector<Exponent> budget{2, 2};
    os << name << ": G1+G2+G3 of " << ideals_label(pres) << ", t-budget 2,2\n";
    os << describe_report(verify_gb(pres, build_ht_basis(pres), budget, opts));
  } else {  // rees-oracle
    Presentation pres = make_presentation(single_pair_spec());
    std::vector<Exponent> budget{2};
    auto fiber_gb = build_G1(pres, 0);
    auto basis = build_fiber_type_basis(pres, fiber_gb);
    auto span = rees_kernel_span(pres, 6, budget);
    auto result = check_membership(span.pairs, ReductionSystem<MixedMonomial>(basis),
                                   default_step_limit(span.largest_fiber));
    os << name << ": syzygies + G1 of " << ideals_label(pres)
       << " against the multi-Rees kernel, x-degree <= 6, t-budget 2\n";
    os << "basis size: " << basis.size() << " (" << basis.size() - fiber_gb.size()
       << " syzygies)\n";
    os << "kernel pairs checked: " << result.checked << "\n";
    os << "largest fiber: " << span.largest_fiber << "\n";
    os << "failures: " << result.failures.size() << "\n";
    os << "verdict: " << (result.passed() ? "certified-up-to-bound" : "refuted") << "\n";
  }
  return os.str();
}

}  // namespace

PlainExample plain_example(const std::string& name) {
  PlainExample ex;
  if (name == "two-sinks") {
    ex.n = 3;
    ex.rules = {rule("x1*x3", "x2^2", 3), rule("x1*x2", "x3^2", 3)};
    ex.start = mono("x1*x2*x3", 3);
  } else if (name == "unique-sink") {
    ex.n = 5;
    ex.rules = {rule("x1*x4", "x2*x5", 5), rule("x2*x3", "x4^2", 5)};
    ex.start = mono("x1*x2*x3*x4", 5);
  } else if (name == "cycle") {
    ex.n = 6;
    ex.rules = {rule("x1*x5", "x2*x4", 6), rule("x2*x6", "x3*x5", 6), rule("x3*x4", "x1*x6", 6)};
    ex.start = mono("x1*x3*x5*x6", 6);
  } else {
    throw Error("unknown plain example '" + name + "'");
  }
  return ex;
}

IdealSpec single_pair_spec() { return {5, {{mono("x3^2", 5), mono("x2*x5", 5)}}}; }

MultiDegree single_pair_multidegree() { return {mono("x1^2*x2^2*x3^2*x4*x5", 5), {4}}; }

IdealSpec running_pair_spec() {
  return {6, {{mono("x4*x5", 6), mono("x2*x6", 6)}, {mono("x4^2", 6), mono("x3*x6", 6)}}};
}

MultiDegree running_pair_multidegree() { return {mono("x2*x3*x4^2*x5*x6", 6), {2, 1}}; }

ObstructionExample obstruction_example(const std::string& name, const Params& p) {
  if (p.a < 0 || p.b < 0 || p.c < 0) throw Error("family parameters must be non-negative");
  ObstructionExample ex;
  if (name == "triple-obstruction") {
    const std::size_t n = 6;
    Monomial A1 = shifted("x3^2", n, p.a), A2 = shifted("x1*x5", n, p.a);
    Monomial B1 = shifted("x3^2", n, p.b), B2 = shifted("x2*x4", n, p.b);
    Monomial C1 = shifted("x2*x4", n, p.c), C2 = shifted("x1*x5", n, p.c);
    ex.spec = {n, {{A1, A2}, {B1, B2}, {C1, C2}}};
    ex.t_budget = {1, 1, 1};
    ex.mu = {multiply(multiply(A2, B1), C1), {1, 1, 1}};
    ex.lhs = {{0, A2}, {1, B1}, {2, C1}};
    ex.rhs = {{0, A1}, {1, B2}, {2, C2}};
  } else if (name == "quartic-obstruction") {
    const std::size_t n = 4;
    Monomial A1 = shifted("x1^2*x3^2", n, p.a), A2 = shifted("x1*x2^2*x3", n, p.a);
    Monomial B1 = shifted("x1^2*x3^2", n, p.b), B2 = shifted("x2^4", n, p.b);
    ex.spec = {n, {{A1, A2}, {B1, B2}}};
    ex.t_budget = {2, 1};
    ex.mu = {multiply(multiply(A1, A1), B2), {2, 1}};
    ex.lhs = {{0, A1}, {0, A1}, {1, B2}};
    ex.rhs = {{0, A2}, {0, A2}, {1, B1}};
  } else if (name == "mixed-degree-obstruction") {
    const std::size_t n = 4;
    Monomial A1 = mono("x1*x3", n), A2 = mono("x2^2", n);
    Monomial B1 = shifted("x1^2*x3^2", n, p.a), B2 = shifted("x2^4", n, p.a);
    ex.spec = {n, {{A1, A2}, {B1, B2}}};
    ex.t_budget = {2, 1};
    ex.mu = {multiply(multiply(A1, A1), B2), {2, 1}};
    ex.lhs = {{0, A1}, {0, A1}, {1, B2}};
    ex.rhs = {{0, A2}, {0, A2}, {1, B1}};
  } else {
    throw Error("unknown obstruction example '" + name + "'");
  }
  return ex;
}

PresMonomial factors_to_pres(const Presentation& pres,
                             const std::vector<std::pair<std::size_t, Monomial>>& factors) {
  std::vector<VarId> ids;
  for (const auto& [ideal, gen] : factors) {
    auto v = pres.find_var(ideal, gen);
    if (!v) throw Error(format_monomial(gen) + " is not a generator of ideal " + std::to_string(ideal + 1));
    ids.push_back(*v);
  }
  return PresMonomial::from_factors(pres.num_vars(), ids);
}

std::vector<std::string> names() {
  return {"two-sinks",          "unique-sink",         "cycle",
          "single-pair-fiber",  "running-pair-fiber",  "triple-obstruction",
          "quartic-obstruction", "mixed-degree-obstruction", "rees-oracle",
          "single-pair-rlex",   "single-pair-mrlex",   "running-pair-ht"};
}

std::string run(const std::string& name, const Params& p, std::size_t jobs) {
  if (name == "two-sinks" || name == "unique-sink" || name == "cycle") return run_plain(name);
  if (name == "single-pair-fiber") {
    return run_fiber(name, single_pair_spec(), single_pair_multidegree(), false);
  }
  if (name == "running-pair-fiber") {
    return run_fiber(name, running_pair_spec(), running_pair_multidegree(), true);
  }
  if (name.ends_with("-obstruction")) return run_obstruction(name, p, jobs);
  if (name == "rees-oracle" || name.starts_with("single-pair-") || name == "running-pair-ht") {
    return run_certification(name, jobs);
  }
  throw Error("unknown example '" + name + "'");
}

std::string expectation_stem(const std::string& name, const Params& p) {
  if (p.a == 0 && p.b == 0 && p.c == 0) return name;
  return name + "_a" + std::to_string(p.a) + "_b" + std::to_string(p.b) + "_c" +
         std::to_string(p.c);
}

}  // namespace borel_rees::catalog

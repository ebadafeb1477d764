#include "borel_rees/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "borel_rees/text.hpp"

namespace borel_rees {

namespace {

std::size_t resolve_jobs(std::size_t jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return jobs;
}

// Runs body(i) for i in [0, count) on up to `jobs` threads. Items are
// claimed through a shared counter; callers store results by index.
template <class Body>
void parallel_for(std::size_t count, std::size_t jobs, Body body) {
  jobs = std::min(resolve_jobs(jobs), std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) body(i);
  };
  if (jobs == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (std::size_t k = 0; k < jobs; ++k) {
    pool.emplace_back([&] {
      try {
        worker();
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

class ProgressTicker {
 public:
  ProgressTicker(const std::function<void(std::size_t, std::size_t)>& cb, std::size_t total)
      : cb_(cb), total_(total) {}
  void tick() {
    if (!cb_) return;
    std::lock_guard lock(mutex_);
    ++done_;
    if (done_ % 500 == 0 || done_ == total_) cb_(done_, total_);
  }

 private:
  const std::function<void(std::size_t, std::size_t)>& cb_;
  std::size_t total_;
  std::size_t done_ = 0;
  std::mutex mutex_;
};

}  // namespace

VerificationReport verify_gb(const Presentation& pres, const std::vector<PresBinomial>& basis,
                             std::span<const Exponent> t_budget, const VerifyOptions& options) {
  const ReductionSystem<PresMonomial> sys(basis);
  const std::vector<MultiDegree> degrees = pres.enumerate_multidegrees(t_budget);
  std::vector<FiberResult> results(degrees.size());
  std::vector<std::size_t> sizes(degrees.size(), 0);
  ProgressTicker ticker(options.progress, degrees.size());
  const bool keep_vertices = static_cast<bool>(options.observer);

  parallel_for(degrees.size(), options.jobs, [&](std::size_t i) {
    std::vector<PresMonomial> fiber = pres.enumerate_fiber(degrees[i]);
    auto graph = build_fiber_graph(fiber, sys);
    GraphAnalysis a = analyze(graph);
    FiberResult& r = results[i];
    r.mu = degrees[i];
    for (std::size_t s : a.sinks) r.sinks.push_back(graph.vertices[s]);
    r.has_cycle = a.has_cycle;
    sizes[i] = graph.vertices.size();
    if (keep_vertices) r.vertices = std::move(graph.vertices);
    ticker.tick();
  });

  VerificationReport report;
  report.basis_size = basis.size();
  report.t_budget.assign(t_budget.begin(), t_budget.end());
  report.multidegrees_checked = degrees.size();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const FiberResult& r = results[i];
    report.largest_fiber = std::max(report.largest_fiber, sizes[i]);
    if (r.sinks.size() != 1 || r.has_cycle) {
      report.failures.push_back({r.mu, sizes[i], r.sinks, r.has_cycle});
    }
    if (options.observer) options.observer(r);
  }
  return report;
}

namespace {

template <class Mono>
void add_all_pairs(const std::vector<Mono>& group, KernelSpan<Mono>& span) {
  span.largest_fiber = std::max(span.largest_fiber, group.size());
  for (std::size_t a = 0; a < group.size(); ++a) {
    for (std::size_t b = a + 1; b < group.size(); ++b) span.pairs.emplace_back(group[a], group[b]);
  }
}

}  // namespace

KernelSpan<PresMonomial> toric_kernel_span(const Presentation& pres,
                                           std::span<const Exponent> t_budget) {
  KernelSpan<PresMonomial> span;
  for (const MultiDegree& mu : pres.enumerate_multidegrees(t_budget)) {
    add_all_pairs(pres.enumerate_fiber(mu), span);
  }
  return span;
}

KernelSpan<MixedMonomial> rees_kernel_span(const Presentation& pres, Exponent max_x_degree,
                                           std::span<const Exponent> t_budget) {
  if (t_budget.size() != pres.num_ideals()) throw Error("t-budget has the wrong length");
  std::vector<Monomial> xs;
  for (Exponent k = 0; k <= max_x_degree; ++k) {
    auto part = monomials_of_degree(pres.ambient_vars(), k);
    xs.insert(xs.end(), part.begin(), part.end());
  }
  std::map<MultiDegree, std::vector<MixedMonomial>> groups;
  std::vector<Exponent> t(pres.num_ideals(), 0);
  while (true) {
    for (const PresMonomial& u : pres.enumerate_monomials(t)) {
      MultiDegree base = pres.phi(u);
      for (const Monomial& m : xs) {
        groups[{multiply(base.x, m), base.t}].push_back({m, u});
      }
    }
    std::size_t i = 0;
    while (i < t.size() && t[i] == t_budget[i]) t[i++] = 0;
    if (i == t.size()) break;
    ++t[i];
  }
  KernelSpan<MixedMonomial> span;
  for (auto& [mu, group] : groups) {
    std::sort(group.begin(), group.end());
    add_all_pairs(group, span);
  }
  return span;
}

template <class Mono>
MembershipResult<Mono> check_membership(const std::vector<std::pair<Mono, Mono>>& pairs,
                                        const ReductionSystem<Mono>& sys, std::size_t step_limit) {
  MembershipResult<Mono> result;
  // Memoized normal forms; nullopt records a step-limit failure.
  std::unordered_map<Mono, std::optional<Mono>, MonoHash<Mono>> memo;
  auto nf = [&](const Mono& v) -> const std::optional<Mono>& {
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    std::optional<Mono> value;
    try {
      value = normal_form(v, sys, step_limit);
    } catch (const StepLimitExceeded&) {
    }
    return memo.emplace(v, std::move(value)).first->second;
  };
  for (const auto& [lhs, rhs] : pairs) {
    ++result.checked;
    std::optional<Mono> a = nf(lhs);
    std::optional<Mono> b = nf(rhs);
    if (!a || !b) {
      result.failures.push_back({lhs, rhs, a, b, "step limit exceeded"});
    } else if (!(*a == *b)) {
      result.failures.push_back({lhs, rhs, a, b, "normal forms differ"});
    }
  }
  return result;
}

template MembershipResult<PresMonomial> check_membership(
    const std::vector<std::pair<PresMonomial, PresMonomial>>&,
    const ReductionSystem<PresMonomial>&, std::size_t);
template MembershipResult<MixedMonomial> check_membership(
    const std::vector<std::pair<MixedMonomial, MixedMonomial>>&,
    const ReductionSystem<MixedMonomial>&, std::size_t);

namespace {

// Quadratic swaps p*q -> p'*q' that keep both the content and the t-degrees.
class MoveTable {
 public:
  explicit MoveTable(const Presentation& pres) {
    std::map<std::pair<std::vector<Exponent>, std::pair<std::size_t, std::size_t>>, std::size_t>
        keys;
    const VarId n = static_cast<VarId>(pres.num_vars());
    for (VarId p = 0; p < n; ++p) {
      for (VarId q = p; q < n; ++q) {
        Monomial prod = multiply(pres.generator(p), pres.generator(q));
        auto key = std::make_pair(std::vector<Exponent>(prod.exponents().begin(), prod.exponents().end()),
                                  std::make_pair(pres.var(p).ideal, pres.var(q).ideal));
        auto [it, fresh] = keys.try_emplace(key, groups_.size());
        if (fresh) groups_.emplace_back();
        groups_[it->second].push_back({p, q});
        group_of_[{p, q}] = it->second;
      }
    }
  }

  const std::vector<std::pair<VarId, VarId>>& partners(VarId p, VarId q) const {
    return groups_[group_of_.at({p, q})];
  }

 private:
  std::vector<std::vector<std::pair<VarId, VarId>>> groups_;
  std::map<std::pair<VarId, VarId>, std::size_t> group_of_;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

std::vector<std::vector<PresMonomial>> components_with(const Presentation& pres,
                                                       const MoveTable& moves,
                                                       const MultiDegree& mu) {
  std::vector<PresMonomial> fiber = pres.enumerate_fiber(mu);
  std::unordered_map<PresMonomial, std::size_t, PresMonomialHash> index;
  for (std::size_t i = 0; i < fiber.size(); ++i) index.emplace(fiber[i], i);
  std::vector<std::size_t> parent(fiber.size());
  std::iota(parent.begin(), parent.end(), 0);

  for (std::size_t i = 0; i < fiber.size(); ++i) {
    const PresMonomial& v = fiber[i];
    std::vector<VarId> support;
    for (VarId x = 0; x < v.num_pres_vars(); ++x) {
      if (v.count(x) > 0) support.push_back(x);
    }
    for (std::size_t a = 0; a < support.size(); ++a) {
      for (std::size_t b = a; b < support.size(); ++b) {
        VarId p = support[a];
        VarId q = support[b];
        if (p == q && v.count(p) < 2) continue;
        VarId old_f[2] = {p, q};
        PresMonomial rest = quotient(v, PresMonomial::from_factors(pres.num_vars(), old_f));
        for (auto [p2, q2] : moves.partners(p, q)) {
          if (p2 == p && q2 == q) continue;
          VarId new_f[2] = {p2, q2};
          PresMonomial w = multiply(rest, PresMonomial::from_factors(pres.num_vars(), new_f));
          auto it = index.find(w);
          if (it == index.end()) throw Error("quadratic move leaves the fiber");
          std::size_t ra = find_root(parent, i);
          std::size_t rb = find_root(parent, it->second);
          if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
      }
    }
  }

  // Components ordered by their first (smallest-index) member.
  std::map<std::size_t, std::vector<PresMonomial>> by_root;
  for (std::size_t i = 0; i < fiber.size(); ++i) by_root[find_root(parent, i)].push_back(fiber[i]);
  std::vector<std::vector<PresMonomial>> out;
  for (auto& [root, comp] : by_root) out.push_back(std::move(comp));
  return out;
}

}  // namespace

std::vector<std::vector<PresMonomial>> quadratic_move_components(const Presentation& pres,
                                                                 const MultiDegree& mu) {
  return components_with(pres, MoveTable(pres), mu);
}

std::vector<ObstructionWitness> detect_obstructions(const Presentation& pres,
                                                    std::span<const Exponent> t_budget,
                                                    std::size_t jobs) {
  const MoveTable moves(pres);
  std::vector<MultiDegree> degrees;
  for (MultiDegree& mu : pres.enumerate_multidegrees(t_budget)) {
    if (mu.t_total() >= 3) degrees.push_back(std::move(mu));
  }
  std::vector<std::vector<std::vector<PresMonomial>>> comps(degrees.size());
  parallel_for(degrees.size(), jobs,
               [&](std::size_t i) { comps[i] = components_with(pres, moves, degrees[i]); });
  std::vector<ObstructionWitness> out;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (comps[i].size() >= 2) out.push_back({degrees[i], std::move(comps[i])});
  }
  return out;
}

const char* gate_case_name(GateCase c) {
  switch (c) {
    case GateCase::A: return "case-a";
    case GateCase::B: return "case-b";
    case GateCase::C: return "case-c";
    case GateCase::SingleIdeal: return "single-ideal";
    case GateCase::KnownObstructed: break;
  }
  return "known-obstructed";
}

GateResult parameter_gate(const std::vector<int>& g, const std::vector<int>& d) {
  if (g.size() != d.size()) throw Error("parameter lists have different lengths");
  if (g.empty()) throw Error("parameter lists are empty");
  GateResult res;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] < 1 || d[i] < 1) throw Error("parameters must be at least 1");
    res.sorted.emplace_back(g[i], d[i]);
  }
  std::sort(res.sorted.begin(), res.sorted.end());
  const auto& s = res.sorted;
  const std::size_t r = s.size();
  auto leading_ones = [&](std::size_t count) {
    return std::all_of(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(count),
                       [](const auto& p) { return p.first == 1; });
  };
  auto last_two_small_quadric_pair = [&] {
    const auto& p = s[r - 2];
    const auto& q = s[r - 1];
    return p.first == 2 && q.first == 2 && 2 <= p.second && p.second <= q.second && q.second <= 3;
  };

  if (r == 1) {
    res.verdict = s[0].first <= 2 ? GateCase::SingleIdeal : GateCase::KnownObstructed;
  } else if (leading_ones(r - 1) && s[r - 1].first <= 2) {
    res.verdict = GateCase::C;
  } else if (r == 2 && last_two_small_quadric_pair()) {
    res.verdict = GateCase::A;
  } else if (r > 2 && leading_ones(r - 2) && last_two_small_quadric_pair()) {
    res.verdict = GateCase::B;
  } else {
    res.verdict = GateCase::KnownObstructed;
  }
  return res;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::Obstructed: return "obstruction-found";
    case Verdict::Inconclusive: break;
  }
  return "inconclusive";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Certified: return 0;
    case Verdict::Obstructed: return 2;
    case Verdict::Inconclusive: break;
  }
  return 3;
}

namespace {

bool is_two_quadric(const StronglyStableIdeal& I) {
  if (I.degree() != 2 || I.borel_generators().size() > 2) return false;
  try {
    region_partition(I);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

KoszulReport koszul_report(const Presentation& pres, std::span<const Exponent> t_budget,
                           std::size_t jobs) {
  KoszulReport rep;
  std::vector<int> g;
  std::vector<int> d;
  for (const auto& I : pres.ideals()) {
    g.push_back(static_cast<int>(I.borel_generators().size()));
    d.push_back(I.degree());
  }
  rep.gate = parameter_gate(g, d);

  Exponent total = 0;
  for (Exponent e : t_budget) total += e;
  if (total >= 3) rep.witnesses = detect_obstructions(pres, t_budget, jobs);

  std::optional<std::vector<PresBinomial>> basis;
  std::string basis_name;
  if (pres.num_ideals() == 1 && is_two_quadric(pres.ideal(0))) {
    basis = build_G1(pres, 0);
    basis_name = "g1";
  } else if (pres.num_ideals() == 2 && is_two_quadric(pres.ideal(0)) &&
             is_two_quadric(pres.ideal(1))) {
    basis = build_ht_basis(pres);
    basis_name = "ht";
  }
  if (basis) {
    VerifyOptions opts;
    opts.jobs = jobs;
    rep.verification = verify_gb(pres, *basis, t_budget, opts);
    rep.verification->basis = basis_name;
  }

  if (!rep.witnesses.empty()) {
    rep.verdict = Verdict::Obstructed;
    rep.explanation = "a fiber is disconnected under quadratic moves, so the toric ideal "
                      "needs a generator of degree >= 3 and the algebra is not Koszul";
  } else if (rep.verification && rep.verification->certified()) {
    rep.verdict = Verdict::Certified;
    rep.explanation = "quadratic Groebner basis verified on every fiber within the budget "
                      "(evidence up to the bound, not a proof)";
  } else if (rep.verification) {
    rep.verdict = Verdict::Inconclusive;
    rep.explanation = "the explicit quadratic basis failed on some fiber and no obstruction was "
                      "found within the budget";
  } else {
    rep.verdict = Verdict::Inconclusive;
    rep.explanation = "no explicit quadratic basis for this shape and no obstruction within "
                      "the budget";
  }
  return rep;
}

}  // namespace borel_rees

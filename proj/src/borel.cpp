#include "borel_rees/borel.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace borel_rees {

std::optional<std::size_t> StronglyStableIdeal::index_of(const Monomial& gen) const {
  // minimal_ is rlex-descending.
  auto it = std::lower_bound(minimal_.begin(), minimal_.end(), gen,
                             [](const Monomial& a, const Monomial& b) {
                               return rlex_compare(a, b) > 0;
                             });
  if (it != minimal_.end() && *it == gen) return static_cast<std::size_t>(it - minimal_.begin());
  return std::nullopt;
}

bool StronglyStableIdeal::contains(const Monomial& m) const {
  return std::any_of(minimal_.begin(), minimal_.end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

StronglyStableIdeal borel_closure(std::span<const Monomial> gens, std::size_t num_vars) {
  if (gens.empty()) throw Error("a strongly stable ideal needs at least one Borel generator");
  const Exponent degree = gens.front().degree();
  for (const Monomial& g : gens) {
    if (g.num_vars() != num_vars) {
      throw Error("Borel generator has " + std::to_string(g.num_vars()) +
                  " variables, expected " + std::to_string(num_vars));
    }
    if (g.degree() != degree) throw Error("Borel generators have mixed degrees");
  }

  std::unordered_set<Monomial, MonomialHash> seen(gens.begin(), gens.end());
  std::deque<Monomial> queue(gens.begin(), gens.end());
  while (!queue.empty()) {
    Monomial m = std::move(queue.front());
    queue.pop_front();
    for (std::size_t from = 1; from < num_vars; ++from) {
      if (m[from] == 0) continue;
      for (std::size_t to = 0; to < from; ++to) {
        Monomial r = one_step_reduction(m, from, to);
        if (seen.insert(r).second) queue.push_back(std::move(r));
      }
    }
  }

  StronglyStableIdeal ideal;
  ideal.num_vars_ = num_vars;
  ideal.degree_ = degree;
  ideal.borel_.assign(gens.begin(), gens.end());
  ideal.minimal_.assign(seen.begin(), seen.end());
  std::sort(ideal.minimal_.begin(), ideal.minimal_.end(),
            [](const Monomial& a, const Monomial& b) { return rlex_compare(a, b) > 0; });
  return ideal;
}

Region TwoQuadricView::region_of(const Monomial& gen) const {
  if (std::find(B_M.begin(), B_M.end(), gen) != B_M.end()) return Region::M;
  if (std::find(B_N.begin(), B_N.end(), gen) != B_N.end()) return Region::N;
  throw Error("monomial is not a minimal generator of this ideal");
}

namespace {

// Sorted 0-based variable indices of a quadric.
std::pair<std::size_t, std::size_t> quadric_indices(const Monomial& q) {
  if (q.degree() != 2) throw Error("region partition needs quadric Borel generators");
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < q.num_vars(); ++i) {
    for (Exponent k = 0; k < q[i]; ++k) idx.push_back(i);
  }
  return {idx[0], idx[1]};
}

}  // namespace

TwoQuadricView region_partition(const StronglyStableIdeal& ideal) {
  const auto& gens = ideal.borel_generators();
  if (gens.empty() || gens.size() > 2) {
    throw Error("region partition needs one or two Borel generators, got " +
                std::to_string(gens.size()));
  }
  TwoQuadricView view;
  const std::size_t n = ideal.num_vars();
  if (gens.size() == 1) {
    auto [a, b] = quadric_indices(gens[0]);
    view.M = gens[0];
    view.a = a;
    view.b = b;
    view.B_M = ideal.minimal_generators();
    return view;
  }

  auto p = quadric_indices(gens[0]);
  auto q = quadric_indices(gens[1]);
  // N has the smaller first index and the larger second index.
  bool first_is_m = q.first < p.first && p.second < q.second;
  bool second_is_m = p.first < q.first && q.second < p.second;
  if (!first_is_m && !second_is_m) {
    throw Error("Borel generators violate c < a <= b < d (one generator lies in the "
                "strongly stable closure of the other)");
  }
  const Monomial& M = first_is_m ? gens[0] : gens[1];
  const Monomial& N = first_is_m ? gens[1] : gens[0];
  auto [a, b] = first_is_m ? p : q;
  auto [c, d] = first_is_m ? q : p;
  view.M = M;
  view.N = N;
  view.a = a;
  view.b = b;
  view.c = c;
  view.d = d;

  StronglyStableIdeal closure_m = borel_closure(std::span<const Monomial>(&M, 1), n);
  for (const Monomial& g : ideal.minimal_generators()) {
    if (closure_m.index_of(g)) {
      view.B_M.push_back(g);
    } else {
      view.B_N.push_back(g);
    }
  }
  return view;
}

std::vector<StronglyStableIdeal> validate_collection(
    const std::vector<std::vector<Monomial>>& borel_generators, std::size_t num_vars) {
  if (borel_generators.empty()) throw Error("empty ideal collection");
  std::vector<StronglyStableIdeal> ideals;
  ideals.reserve(borel_generators.size());
  for (std::size_t i = 0; i < borel_generators.size(); ++i) {
    try {
      ideals.push_back(borel_closure(borel_generators[i], num_vars));
    } catch (const Error& e) {
      throw Error("ideal " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  if (ideals.size() == 2 && ideals[0].borel_generators().size() == 2 &&
      ideals[1].borel_generators().size() == 2 && ideals[0].degree() == 2 &&
      ideals[1].degree() == 2) {
    TwoQuadricView v1 = region_partition(ideals[0]);
    TwoQuadricView v2 = region_partition(ideals[1]);
    if (v1.d > v2.d) std::swap(ideals[0], ideals[1]);
  }
  return ideals;
}

}  // namespace borel_rees

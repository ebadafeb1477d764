#pragma once

// Independent reference computations shared by the unit and acceptance suites.
// They work on plain factor lists and never call the reduction engine.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "borel_rees/borel.hpp"
#include "borel_rees/orders.hpp"
#include "borel_rees/presentation.hpp"
#include "borel_rees/text.hpp"

namespace oracle {

using namespace borel_rees;

using Factors = std::vector<VarId>;  // sorted multiset

inline Factors factors_of(const PresMonomial& u) { return u.factors(); }

// b \ a as multisets, or nullopt if a is not a sub-multiset of b.
inline std::optional<Factors> multiset_minus(const Factors& b, const Factors& a) {
  Factors rest;
  std::size_t i = 0;
  for (VarId v : b) {
    if (i < a.size() && a[i] == v) {
      ++i;
    } else {
      rest.push_back(v);
    }
  }
  if (i != a.size()) return std::nullopt;
  return rest;
}

inline Factors multiset_plus(Factors a, const Factors& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

// Edge set {(from, to)} of the fiber graph on `vertices`, by testing every rule on every vertex.
inline std::set<std::pair<std::size_t, std::size_t>> brute_force_edges(
    const std::vector<PresMonomial>& vertices, const std::vector<PresBinomial>& rules) {
  std::map<Factors, std::size_t> index;
  for (std::size_t v = 0; v < vertices.size(); ++v) index[factors_of(vertices[v])] = v;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    Factors fv = factors_of(vertices[v]);
    for (const auto& r : rules) {
      auto rest = multiset_minus(fv, factors_of(r.lead));
      if (!rest) continue;
      auto w = index.find(multiset_plus(*rest, factors_of(r.trail)));
      if (w != index.end()) edges.insert({v, w->second});
    }
  }
  return edges;
}

// Longest path from `from` in a DAG given by an edge set (plain exhaustive recursion).
inline std::size_t longest_path(const std::set<std::pair<std::size_t, std::size_t>>& edges,
                                std::size_t from) {
  std::size_t best = 0;
  for (auto [a, b] : edges) {
    if (a == from) best = std::max(best, 1 + longest_path(edges, b));
  }
  return best;
}

// 0-based (i, j), i <= j, of a quadric monomial.
inline std::pair<std::size_t, std::size_t> quadric_indices(const Monomial& m) {
  std::vector<std::size_t> idx;
  for (std::size_t v = 0; v < m.num_vars(); ++v) {
    for (Exponent k = 0; k < m[v]; ++k) idx.push_back(v);
  }
  return {idx.at(0), idx.at(1)};
}

struct Factor {
  Monomial gen;
  Region region;
  std::size_t i, j;
};

// Factors of ideal `ideal` in u, sorted descending: by rlex, or with the B_N block first.
inline std::vector<Factor> sorted_block(const Presentation& pres, std::size_t ideal,
                                        const TwoQuadricView& view, const PresMonomial& u,
                                        bool n_first) {
  std::vector<Factor> out;
  for (VarId v : u.factors()) {
    if (pres.var(v).ideal != ideal) continue;
    const Monomial& g = pres.generator(v);
    auto [i, j] = quadric_indices(g);
    out.push_back({g, view.region_of(g), i, j});
  }
  std::sort(out.begin(), out.end(), [&](const Factor& a, const Factor& b) {
    if (n_first && a.region != b.region) return a.region == Region::N;
    return rlex_compare(a.gen, b.gen) > 0;
  });
  return out;
}

using Violations = std::vector<std::string>;

inline std::string describe(const Factor& f) {
  return "x" + std::to_string(f.i + 1) + "x" + std::to_string(f.j + 1);
}

// Index inequalities between factors of a sink under the rlex-induced basis.
inline void check_rlex_sink(const std::vector<Factor>& p, const TwoQuadricView& view,
                            Violations& out) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    for (std::size_t l = k + 1; l < p.size(); ++l) {
      const Factor& a = p[k];
      const Factor& b = p[l];
      if (a.region == b.region) {
        if (!(a.i <= b.i && a.j <= b.j)) out.push_back("same-region rlex " + describe(a) + "," + describe(b));
      } else if (a.region == Region::M) {
        if (!(a.i <= b.i || view.c < a.i)) out.push_back("M/N rlex " + describe(a) + "," + describe(b));
        if (a.i == b.i && !(a.i == a.j || view.c < a.j)) {
          out.push_back("M/N rlex equal-i " + describe(a) + "," + describe(b));
        }
      } else {
        out.push_back("rlex sort put B_N before B_M");
      }
    }
  }
}

// Index inequalities between factors of a sink under the mrlex-induced basis.
inline void check_mrlex_sink(const std::vector<Factor>& p, Violations& out) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    for (std::size_t l = k + 1; l < p.size(); ++l) {
      const Factor& a = p[k];
      const Factor& b = p[l];
      if (a.region == b.region) {
        if (!(a.i <= b.i && a.j <= b.j)) out.push_back("same-region mrlex " + describe(a) + "," + describe(b));
      } else if (a.region == Region::N) {
        if (!(a.i <= b.i)) out.push_back("N/M mrlex " + describe(a) + "," + describe(b));
      } else {
        out.push_back("mrlex sort put B_M before B_N");
      }
    }
  }
}

// For a sink of the two-ideal basis whose last second-ideal factor lies in B_N:
// the second-ideal chain i_1 <= .. <= i_q <= c2 < b2 < j_1 <= .. <= j_q <= d2, every
// first-ideal j-index at most j_1, and every first-ideal i-index <= i_1 or > c2.
// Returns whether the hypothesis applied.
inline bool check_pair_sink(const std::vector<Factor>& T, const std::vector<Factor>& Z,
                            const TwoQuadricView& v2, Violations& out) {
  if (Z.empty() || Z.back().region != Region::N) return false;
  for (const Factor& n : Z) {
    if (n.region != Region::N) out.push_back("second-ideal factor outside B_N: " + describe(n));
  }
  for (std::size_t l = 0; l + 1 < Z.size(); ++l) {
    if (Z[l].i > Z[l + 1].i) out.push_back("i-chain not ascending");
    if (Z[l].j > Z[l + 1].j) out.push_back("j-chain not ascending");
  }
  if (!(Z.back().i <= v2.c && v2.c < v2.b && v2.b < Z.front().j && Z.back().j <= v2.d)) {
    out.push_back("second-ideal chain bounds");
  }
  const std::size_t i1 = Z.front().i;
  const std::size_t j1 = Z.front().j;
  for (const Factor& m : T) {
    if (m.j > j1) out.push_back("first-ideal j-index " + describe(m) + " exceeds j_1");
    if (!(m.i <= i1 || m.i > v2.c)) out.push_back("first-ideal i-index " + describe(m));
  }
  return true;
}

// For two sinks V, V' of the same fiber with V's last second-ideal factor in B_N and V''s
// in B_M: j_1 of V exceeds b_1. Returns whether the hypothesis applied.
inline bool check_two_sink_pair(const std::vector<Factor>& Z, const std::vector<Factor>& Zp,
                                const TwoQuadricView& v1, Violations& out) {
  if (Z.empty() || Zp.empty()) return false;
  if (Z.back().region != Region::N || Zp.back().region != Region::M) return false;
  if (!(Z.front().j > v1.b)) out.push_back("j_1 not above b_1");
  return true;
}

enum class Type { M, N, Mixed };

inline Type type_of(const Presentation& pres, std::size_t ideal, const TwoQuadricView& view,
                    const PresMonomial& u) {
  bool has_m = false, has_n = false;
  for (VarId v : u.factors()) {
    if (pres.var(v).ideal != ideal) continue;
    (view.region_of(pres.generator(v)) == Region::M ? has_m : has_n) = true;
  }
  if (has_m && !has_n) return Type::M;
  if (has_n && !has_m) return Type::N;
  return Type::Mixed;
}

// o = sum over x-factors x_{i_q} of m of sum_{t > i_q} alpha_{u,t}, written as the double sum.
inline Exponent o_formula(const Presentation& pres, const MixedMonomial& mu) {
  Monomial alpha = pres.content(mu.t);
  Exponent o = 0;
  for (std::size_t iq = 0; iq < mu.x.num_vars(); ++iq) {
    for (Exponent rep = 0; rep < mu.x[iq]; ++rep) {
      for (std::size_t t = iq + 1; t < alpha.num_vars(); ++t) o += alpha[t];
    }
  }
  return o;
}

}  // namespace oracle

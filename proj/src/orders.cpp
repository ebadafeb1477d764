#include "borel_rees/orders.hpp"

#include <algorithm>
#include <map>

namespace borel_rees {

PresOrder::PresOrder(OrderKind kind, std::size_t num_vars, std::vector<VarId> chain)
    : kind_(kind), rank_(num_vars, -1), chain_(std::move(chain)) {
  for (std::size_t r = 0; r < chain_.size(); ++r) rank_[chain_[r]] = static_cast<int>(r);
}

namespace {

std::vector<VarId> rlex_chain(const Presentation& pres, std::size_t ideal) {
  std::vector<VarId> chain;
  for (std::size_t j = 0; j < pres.var_count(ideal); ++j) chain.push_back(pres.var_id(ideal, j));
  return chain;
}

std::vector<VarId> mrlex_chain(const Presentation& pres, std::size_t ideal, MrlexVariant variant) {
  TwoQuadricView view = region_partition(pres.ideal(ideal));
  if (variant == MrlexVariant::LiteralClause) {
    // Cross-region comparisons fall back on rlex, so the whole chain is rlex.
    return rlex_chain(pres, ideal);
  }
  std::vector<VarId> chain;
  for (const auto* block : {&view.B_N, &view.B_M}) {
    for (const Monomial& g : *block) chain.push_back(*pres.find_var(ideal, g));
  }
  return chain;
}

}  // namespace

PresOrder PresOrder::rlex(const Presentation& pres, std::size_t ideal) {
  return PresOrder(OrderKind::Rlex, pres.num_vars(), rlex_chain(pres, ideal));
}

PresOrder PresOrder::mrlex(const Presentation& pres, std::size_t ideal, MrlexVariant variant) {
  return PresOrder(OrderKind::Mrlex, pres.num_vars(), mrlex_chain(pres, ideal, variant));
}

PresOrder PresOrder::head_tail(const Presentation& pres) {
  if (pres.num_ideals() != 2) throw Error("head-and-tail order needs exactly two ideals");
  std::vector<VarId> chain = rlex_chain(pres, 0);
  std::vector<VarId> tail = mrlex_chain(pres, 1, MrlexVariant::Block);
  chain.insert(chain.end(), tail.begin(), tail.end());
  return PresOrder(OrderKind::HeadTail, pres.num_vars(), std::move(chain));
}

int PresOrder::rank(VarId v) const {
  if (!in_domain(v)) throw Error("presentation variable outside the order's domain");
  return rank_[v];
}

std::strong_ordering PresOrder::compare_vars(VarId p, VarId q) const {
  return rank(q) <=> rank(p);
}

std::strong_ordering PresOrder::compare(const PresMonomial& a, const PresMonomial& b) const {
  if (a.num_pres_vars() != rank_.size() || b.num_pres_vars() != rank_.size()) {
    throw Error("presentation monomial from a different presentation");
  }
  Exponent covered_a = 0;
  Exponent covered_b = 0;
  for (VarId v : chain_) {
    covered_a += a.count(v);
    covered_b += b.count(v);
  }
  if (covered_a != a.degree() || covered_b != b.degree()) {
    throw Error("presentation variable outside the order's domain");
  }
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t r = chain_.size(); r-- > 0;) {
    Exponent ea = a.count(chain_[r]);
    Exponent eb = b.count(chain_[r]);
    if (ea != eb) return ea < eb ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::vector<VarId> PresOrder::sorted_factors(const PresMonomial& u) const {
  std::vector<VarId> f = u.factors();
  std::sort(f.begin(), f.end(), [&](VarId p, VarId q) { return rank(p) < rank(q); });
  return f;
}

namespace {

PresMonomial pair_monomial(const Presentation& pres, VarId p, VarId q) {
  VarId f[2] = {p, q};
  return PresMonomial::from_factors(pres.num_vars(), f);
}

// Emits one binomial per two factorizations of the same product, lead by `order`.
void emit_grouped(const Presentation& pres,
                  const std::map<std::vector<Exponent>, std::vector<std::pair<VarId, VarId>>>& groups,
                  const PresOrder& order, BasisSource source, std::vector<PresBinomial>& out) {
  for (const auto& [product, pairs] : groups) {
    for (std::size_t x = 0; x < pairs.size(); ++x) {
      for (std::size_t y = x + 1; y < pairs.size(); ++y) {
        PresMonomial A = pair_monomial(pres, pairs[x].first, pairs[x].second);
        PresMonomial B = pair_monomial(pres, pairs[y].first, pairs[y].second);
        if (order.compare(A, B) > 0) {
          out.push_back({std::move(A), std::move(B), source});
        } else {
          out.push_back({std::move(B), std::move(A), source});
        }
      }
    }
  }
}

std::vector<PresBinomial> build_within(const Presentation& pres, std::size_t ideal,
                                       const PresOrder& order, BasisSource source) {
  std::map<std::vector<Exponent>, std::vector<std::pair<VarId, VarId>>> groups;
  const VarId first = pres.first_var(ideal);
  const VarId last = first + static_cast<VarId>(pres.var_count(ideal));
  for (VarId p = first; p < last; ++p) {
    for (VarId q = p; q < last; ++q) {
      Monomial prod = multiply(pres.generator(p), pres.generator(q));
      groups[{prod.exponents().begin(), prod.exponents().end()}].push_back({p, q});
    }
  }
  std::vector<PresBinomial> out;
  emit_grouped(pres, groups, order, source, out);
  return out;
}

}  // namespace

std::vector<PresBinomial> build_G1(const Presentation& pres, std::size_t ideal) {
  return build_within(pres, ideal, PresOrder::rlex(pres, ideal), BasisSource::G1);
}

std::vector<PresBinomial> build_G2(const Presentation& pres, std::size_t ideal,
                                   MrlexVariant variant) {
  return build_within(pres, ideal, PresOrder::mrlex(pres, ideal, variant), BasisSource::G2);
}

std::vector<PresBinomial> build_G3(const Presentation& pres) {
  PresOrder order = PresOrder::head_tail(pres);
  std::map<std::vector<Exponent>, std::vector<std::pair<VarId, VarId>>> groups;
  for (std::size_t j = 0; j < pres.var_count(0); ++j) {
    for (std::size_t k = 0; k < pres.var_count(1); ++k) {
      VarId p = pres.var_id(0, j);
      VarId q = pres.var_id(1, k);
      Monomial prod = multiply(pres.generator(p), pres.generator(q));
      groups[{prod.exponents().begin(), prod.exponents().end()}].push_back({p, q});
    }
  }
  std::vector<PresBinomial> out;
  emit_grouped(pres, groups, order, BasisSource::G3, out);
  return out;
}

std::vector<PresBinomial> build_ht_basis(const Presentation& pres) {
  if (pres.num_ideals() != 2) throw Error("the head-and-tail basis needs exactly two ideals");
  std::vector<PresBinomial> out = build_G1(pres, 0);
  std::vector<PresBinomial> g2 = build_G2(pres, 1);
  std::vector<PresBinomial> g3 = build_G3(pres);
  out.insert(out.end(), g2.begin(), g2.end());
  out.insert(out.end(), g3.begin(), g3.end());
  return out;
}

std::vector<PresBinomial> build_named_basis(const Presentation& pres, const std::string& name) {
  if (name == "g3") return build_G3(pres);
  if (name == "ht") return build_ht_basis(pres);
  if (name != "g1" && name != "g2") {
    throw Error("basis '" + name + "' is not a fiber basis (use g1, g2, g3 or ht)");
  }
  std::vector<PresBinomial> out;
  for (std::size_t i = 0; i < pres.num_ideals(); ++i) {
    auto part = name == "g1" ? build_G1(pres, i) : build_G2(pres, i);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<MixedBinomial> build_syzygy_set(const Presentation& pres) {
  const std::size_t n = pres.ambient_vars();
  std::vector<MixedBinomial> out;
  for (VarId v = 0; v < pres.num_vars(); ++v) {
    const Monomial& u = pres.generator(v);
    const std::size_t ideal = pres.var(v).ideal;
    for (std::size_t j = 1; j < n; ++j) {
      if (u[j] == 0) continue;
      for (std::size_t i = 0; i < j; ++i) {
        Monomial u2 = one_step_reduction(u, j, i);
        VarId w = *pres.find_var(ideal, u2);
        VarId lead_f[1] = {v};
        VarId trail_f[1] = {w};
        out.push_back({{Monomial::variable(n, i), PresMonomial::from_factors(pres.num_vars(), lead_f)},
                       {Monomial::variable(n, j), PresMonomial::from_factors(pres.num_vars(), trail_f)},
                       BasisSource::Syzygy});
      }
    }
  }
  return out;
}

std::vector<MixedBinomial> build_fiber_type_basis(const Presentation& pres,
                                                  const std::vector<PresBinomial>& fiber_gb) {
  std::vector<MixedBinomial> out = build_syzygy_set(pres);
  for (const PresBinomial& b : fiber_gb) {
    out.push_back({pres.lift(b.lead), pres.lift(b.trail), b.source});
  }
  return out;
}

StandardFactorization standard_factorization(const Presentation& pres, std::size_t ideal,
                                             const TwoQuadricView& view, const PresMonomial& u,
                                             bool n_first) {
  StandardFactorization s;
  // Ascending VarId within one ideal is rlex-descending.
  for (VarId v : u.factors()) {
    if (pres.var(v).ideal != ideal) throw Error("factor from another ideal");
    (view.region_of(pres.generator(v)) == Region::M ? s.m_block : s.n_block).push_back(v);
  }
  if (!s.m_block.empty()) s.L_M = s.m_block.back();
  if (!s.n_block.empty()) s.L_N = s.n_block.back();
  const auto& first = n_first ? s.n_block : s.m_block;
  const auto& second = n_first ? s.m_block : s.n_block;
  s.factors = first;
  s.factors.insert(s.factors.end(), second.begin(), second.end());
  return s;
}

RegionMinima region_minima(const TwoQuadricView& view, const Monomial& x) {
  RegionMinima r;
  for (auto it = view.B_M.rbegin(); it != view.B_M.rend(); ++it) {
    if (divides(*it, x)) {
      r.M_prime = *it;
      break;
    }
  }
  for (auto it = view.B_N.rbegin(); it != view.B_N.rend(); ++it) {
    if (divides(*it, x)) {
      r.N_prime = *it;
      break;
    }
  }
  return r;
}

VertexType vertex_type(const Presentation& pres, const TwoQuadricView& view,
                       const PresMonomial& u) {
  bool any_m = false;
  bool any_n = false;
  for (VarId v : u.factors()) {
    (view.region_of(pres.generator(v)) == Region::M ? any_m : any_n) = true;
  }
  if (any_m && any_n) return VertexType::Mixed;
  return any_n ? VertexType::N : VertexType::M;
}

}  // namespace borel_rees

#include "borel_rees/presentation.hpp"

#include <algorithm>
#include <set>

namespace borel_rees {

PresMonomial PresMonomial::from_factors(std::size_t num_pres_vars,
                                        std::span<const VarId> factors) {
  std::vector<Exponent> counts(num_pres_vars, 0);
  for (VarId v : factors) {
    if (v >= num_pres_vars) throw Error("presentation variable out of range");
    ++counts[v];
  }
  return PresMonomial(Monomial(std::move(counts)));
}

std::vector<VarId> PresMonomial::factors() const {
  std::vector<VarId> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (std::size_t v = 0; v < counts_.num_vars(); ++v) {
    for (Exponent k = 0; k < counts_[v]; ++k) out.push_back(static_cast<VarId>(v));
  }
  return out;
}

Exponent MultiDegree::t_total() const {
  Exponent s = 0;
  for (Exponent e : t) s += e;
  return s;
}

PresMonomial multiply(const PresMonomial& a, const PresMonomial& b) {
  return PresMonomial(multiply(a.counts(), b.counts()));
}
bool divides(const PresMonomial& a, const PresMonomial& b) {
  return divides(a.counts(), b.counts());
}
PresMonomial quotient(const PresMonomial& b, const PresMonomial& a) {
  return PresMonomial(quotient(b.counts(), a.counts()));
}
std::uint64_t support_mask(const PresMonomial& m) { return support_mask(m.counts()); }

MixedMonomial multiply(const MixedMonomial& a, const MixedMonomial& b) {
  return {multiply(a.x, b.x), multiply(a.t, b.t)};
}
bool divides(const MixedMonomial& a, const MixedMonomial& b) {
  return divides(a.x, b.x) && divides(a.t, b.t);
}
MixedMonomial quotient(const MixedMonomial& b, const MixedMonomial& a) {
  return {quotient(b.x, a.x), quotient(b.t, a.t)};
}
std::uint64_t support_mask(const MixedMonomial& m) {
  // x-variables in the low half, presentation variables in the high half.
  return (support_mask(m.x) & 0xffffffffULL) | (support_mask(m.t) << 32);
}

Presentation::Presentation(std::vector<StronglyStableIdeal> ideals) : ideals_(std::move(ideals)) {
  if (ideals_.empty()) throw Error("a presentation needs at least one ideal");
  ambient_ = ideals_.front().num_vars();
  for (std::size_t i = 0; i < ideals_.size(); ++i) {
    if (ideals_[i].num_vars() != ambient_) {
      throw Error("ideals of a collection must share the ambient ring");
    }
    offsets_.push_back(static_cast<VarId>(vars_.size()));
    for (std::size_t j = 0; j < ideals_[i].minimal_generators().size(); ++j) {
      vars_.push_back({i, j});
    }
  }
}

const Monomial& Presentation::generator(VarId v) const {
  PresVar pv = vars_.at(v);
  return ideals_[pv.ideal].minimal_generators()[pv.generator];
}

VarId Presentation::var_id(std::size_t ideal, std::size_t generator) const {
  if (generator >= var_count(ideal)) throw Error("generator index out of range");
  return offsets_[ideal] + static_cast<VarId>(generator);
}

std::optional<VarId> Presentation::find_var(std::size_t ideal, const Monomial& gen) const {
  if (ideal >= ideals_.size()) return std::nullopt;
  if (auto j = ideals_[ideal].index_of(gen)) return offsets_[ideal] + static_cast<VarId>(*j);
  return std::nullopt;
}

Monomial Presentation::content(const PresMonomial& u) const {
  std::vector<Exponent> x(ambient_, 0);
  for (std::size_t v = 0; v < u.num_pres_vars(); ++v) {
    Exponent k = u.count(static_cast<VarId>(v));
    if (k == 0) continue;
    const Monomial& g = generator(static_cast<VarId>(v));
    for (std::size_t i = 0; i < ambient_; ++i) x[i] += k * g[i];
  }
  return Monomial(std::move(x));
}

std::vector<Exponent> Presentation::t_degrees(const PresMonomial& u) const {
  std::vector<Exponent> t(ideals_.size(), 0);
  for (std::size_t v = 0; v < u.num_pres_vars(); ++v) {
    t[vars_[v].ideal] += u.count(static_cast<VarId>(v));
  }
  return t;
}

MultiDegree Presentation::phi(const PresMonomial& u) const { return {content(u), t_degrees(u)}; }

MultiDegree Presentation::phi(const MixedMonomial& mu) const {
  MultiDegree d = phi(mu.t);
  d.x = multiply(d.x, mu.x);
  return d;
}

namespace {

// Backtracking placement of generators, ideal by ideal, in non-decreasing
// VarId order, pruned by divisibility against the remaining x-budget.
class FiberWalker {
 public:
  FiberWalker(const Presentation& pres, std::span<const Exponent> t, const Monomial& bound,
              bool exact)
      : pres_(pres), t_(t), exact_(exact), counts_(pres.num_vars(), 0) {
    budget_.assign(bound.exponents().begin(), bound.exponents().end());
    remaining_degree_ = bound.degree();
    for (VarId v = 0; v < pres.num_vars(); ++v) {
      const Monomial& g = pres.generator(v);
      gens_.emplace_back(g.exponents().begin(), g.exponents().end());
    }
    if (t.size() != pres.num_ideals()) throw Error("t-degree vector has the wrong length");
    needed_degree_ = 0;
    for (std::size_t i = 0; i < t.size(); ++i) needed_degree_ += t[i] * pres.ideal(i).degree();
  }

  std::vector<PresMonomial> run() {
    if (needed_degree_ > remaining_degree_) return {};
    if (exact_ && needed_degree_ != remaining_degree_) return {};
    rec(0, 0, 0);
    return std::move(out_);
  }

 private:
  void rec(std::size_t ideal, Exponent placed, VarId min_var) {
    if (ideal == t_.size()) {
      if (exact_ && remaining_degree_ != 0) return;
      out_.emplace_back(Monomial(counts_));
      return;
    }
    if (placed == t_[ideal]) {
      VarId next = ideal + 1 < t_.size() ? pres_.first_var(ideal + 1) : 0;
      rec(ideal + 1, 0, next);
      return;
    }
    const VarId begin = std::max(min_var, pres_.first_var(ideal));
    const VarId end = pres_.first_var(ideal) + static_cast<VarId>(pres_.var_count(ideal));
    const Exponent deg = pres_.ideal(ideal).degree();
    for (VarId v = begin; v < end; ++v) {
      const auto& g = gens_[v];
      bool fits = true;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] > budget_[i]) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      for (std::size_t i = 0; i < g.size(); ++i) budget_[i] -= g[i];
      remaining_degree_ -= deg;
      ++counts_[v];
      rec(ideal, placed + 1, v);
      --counts_[v];
      remaining_degree_ += deg;
      for (std::size_t i = 0; i < g.size(); ++i) budget_[i] += g[i];
    }
  }

  const Presentation& pres_;
  std::span<const Exponent> t_;
  bool exact_;
  std::vector<Exponent> counts_;
  std::vector<Exponent> budget_;
  Exponent remaining_degree_ = 0;
  Exponent needed_degree_ = 0;
  std::vector<std::vector<Exponent>> gens_;
  std::vector<PresMonomial> out_;
};

}  // namespace

std::vector<PresMonomial> Presentation::enumerate_fiber(const MultiDegree& mu) const {
  if (mu.x.num_vars() != ambient_) throw Error("multidegree lives in the wrong ring");
  return FiberWalker(*this, mu.t, mu.x, true).run();
}

std::vector<PresMonomial> Presentation::enumerate_dividing(const Monomial& x_bound,
                                                           std::span<const Exponent> t) const {
  if (x_bound.num_vars() != ambient_) throw Error("x-bound lives in the wrong ring");
  return FiberWalker(*this, t, x_bound, false).run();
}

std::vector<PresMonomial> Presentation::enumerate_monomials(std::span<const Exponent> t) const {
  // Every generator of ideal i divides the product of all of them raised to t_i.
  std::vector<Exponent> bound(ambient_, 0);
  for (std::size_t i = 0; i < ideals_.size(); ++i) {
    for (const Monomial& g : ideals_[i].minimal_generators()) {
      for (std::size_t k = 0; k < ambient_; ++k) bound[k] = std::max(bound[k], g[k] * t[i]);
    }
  }
  std::vector<Exponent> scaled(ambient_, 0);
  for (std::size_t k = 0; k < ambient_; ++k) {
    Exponent total = 0;
    for (Exponent e : t) total += e;
    scaled[k] = bound[k] * std::max<Exponent>(total, 1);
  }
  return enumerate_dividing(Monomial(std::move(scaled)), t);
}

std::vector<MultiDegree> Presentation::enumerate_multidegrees(
    std::span<const Exponent> t_budget) const {
  if (t_budget.size() != ideals_.size()) throw Error("t-budget has the wrong length");
  std::set<MultiDegree> seen;
  std::vector<Exponent> t(ideals_.size(), 0);
  // Odometer over all t <= t_budget.
  while (true) {
    for (const PresMonomial& u : enumerate_monomials(t)) seen.insert(phi(u));
    std::size_t i = 0;
    while (i < t.size() && t[i] == t_budget[i]) t[i++] = 0;
    if (i == t.size()) break;
    ++t[i];
  }
  return {seen.begin(), seen.end()};
}

}  // namespace borel_rees

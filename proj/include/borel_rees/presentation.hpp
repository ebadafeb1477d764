#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "borel_rees/borel.hpp"
#include "borel_rees/monomial.hpp"

namespace borel_rees {

/// Index of a presentation variable T_{i,j} within a Presentation.
using VarId = std::uint32_t;

/// T_{i,j}: generator j of ideal i (both 0-based; j indexes minimal_generators).
struct PresVar {
  std::size_t ideal = 0;
  std::size_t generator = 0;
  bool operator==(const PresVar&) const = default;
};

/// A monomial in the presentation variables.
///
/// Stored as an exponent vector over VarIds, which is the canonical sorted
/// multiset: VarIds run ideal-major and, inside an ideal, follow the
/// rlex-descending generator order.
class PresMonomial {
 public:
  PresMonomial() = default;
  explicit PresMonomial(std::size_t num_pres_vars) : counts_(num_pres_vars) {}
  explicit PresMonomial(Monomial counts) : counts_(std::move(counts)) {}

  static PresMonomial from_factors(std::size_t num_pres_vars, std::span<const VarId> factors);

  const Monomial& counts() const { return counts_; }
  Exponent degree() const { return counts_.degree(); }
  Exponent count(VarId v) const { return counts_[v]; }
  std::size_t num_pres_vars() const { return counts_.num_vars(); }
  /// Factors with multiplicity, ascending VarId.
  std::vector<VarId> factors() const;

  bool operator==(const PresMonomial&) const = default;
  auto operator<=>(const PresMonomial&) const = default;

 private:
  Monomial counts_;
};

/// m * u with m an x-monomial and u a presentation monomial.
struct MixedMonomial {
  Monomial x;
  PresMonomial t;
  bool operator==(const MixedMonomial&) const = default;
  auto operator<=>(const MixedMonomial&) const = default;
};

/// x^mu * t_1^{a_1} ... t_r^{a_r}.
struct MultiDegree {
  Monomial x;
  std::vector<Exponent> t;
  Exponent t_total() const;
  bool operator==(const MultiDegree&) const = default;
  /// Deterministic report order: t-vector first, then x exponents.
  auto operator<=>(const MultiDegree& o) const {
    if (auto c = t <=> o.t; c != 0) return c;
    return x <=> o.x;
  }
};

PresMonomial multiply(const PresMonomial& a, const PresMonomial& b);
bool divides(const PresMonomial& a, const PresMonomial& b);
PresMonomial quotient(const PresMonomial& b, const PresMonomial& a);
std::uint64_t support_mask(const PresMonomial& m);

MixedMonomial multiply(const MixedMonomial& a, const MixedMonomial& b);
bool divides(const MixedMonomial& a, const MixedMonomial& b);
MixedMonomial quotient(const MixedMonomial& b, const MixedMonomial& a);
std::uint64_t support_mask(const MixedMonomial& m);

struct PresMonomialHash {
  std::size_t operator()(const PresMonomial& m) const { return m.counts().hash(); }
};
struct MixedMonomialHash {
  std::size_t operator()(const MixedMonomial& m) const {
    return m.x.hash() * 31 + m.t.counts().hash();
  }
};
struct MultiDegreeHash {
  std::size_t operator()(const MultiDegree& d) const {
    std::size_t h = d.x.hash();
    for (Exponent e : d.t) h = h * 1000003u + static_cast<std::size_t>(e);
    return h;
  }
};

/// The toric presentation T_{i,j} -> u_{i,j} t_i of a collection of ideals.
class Presentation {
 public:
  /// All ideals must live in the same number of variables.
  explicit Presentation(std::vector<StronglyStableIdeal> ideals);

  std::size_t num_ideals() const { return ideals_.size(); }
  std::size_t num_vars() const { return vars_.size(); }
  std::size_t ambient_vars() const { return ambient_; }
  const std::vector<StronglyStableIdeal>& ideals() const { return ideals_; }
  const StronglyStableIdeal& ideal(std::size_t i) const { return ideals_.at(i); }

  PresVar var(VarId v) const { return vars_.at(v); }
  const Monomial& generator(VarId v) const;
  VarId var_id(std::size_t ideal, std::size_t generator) const;
  std::optional<VarId> find_var(std::size_t ideal, const Monomial& gen) const;
  /// VarIds of ideal i form the half-open range [first, first + count).
  VarId first_var(std::size_t ideal) const { return offsets_.at(ideal); }
  std::size_t var_count(std::size_t ideal) const { return ideals_.at(ideal).minimal_generators().size(); }

  PresMonomial unit() const { return PresMonomial(num_vars()); }
  MixedMonomial mixed(const Monomial& x, const PresMonomial& t) const { return {x, t}; }
  MixedMonomial lift(const PresMonomial& t) const { return {Monomial(ambient_), t}; }

  /// Product of the generator monomials (t-grading forgotten).
  Monomial content(const PresMonomial& u) const;
  std::vector<Exponent> t_degrees(const PresMonomial& u) const;
  MultiDegree phi(const PresMonomial& u) const;
  MultiDegree phi(const MixedMonomial& mu) const;

  /// Every presentation monomial V with phi(V) = mu, canonical, no duplicates.
  std::vector<PresMonomial> enumerate_fiber(const MultiDegree& mu) const;

  /// Every presentation monomial with t-degrees `t` whose content divides `x_bound`.
  std::vector<PresMonomial> enumerate_dividing(const Monomial& x_bound,
                                               std::span<const Exponent> t) const;

  /// Every presentation monomial with t-degrees exactly `t`.
  std::vector<PresMonomial> enumerate_monomials(std::span<const Exponent> t) const;

  /// Each multidegree phi(V) with t-degrees(V) <= t_budget componentwise,
  /// exactly once, in MultiDegree order.
  std::vector<MultiDegree> enumerate_multidegrees(std::span<const Exponent> t_budget) const;

 private:
  std::vector<StronglyStableIdeal> ideals_;
  std::size_t ambient_ = 0;
  std::vector<PresVar> vars_;
  std::vector<VarId> offsets_;
};

}  // namespace borel_rees

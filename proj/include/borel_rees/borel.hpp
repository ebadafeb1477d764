#pragma once

#include <optional>
#include <span>
#include <vector>

#include "borel_rees/monomial.hpp"

namespace borel_rees {

/// An equigenerated strongly stable ideal given by Borel generators.
///
/// minimal_generators() is the closure of the Borel generators under all
/// one-step strongly stable reductions, sorted rlex-descending. The Borel
/// generators are kept as given (no minimization).
class StronglyStableIdeal {
 public:
  std::size_t num_vars() const { return num_vars_; }
  Exponent degree() const { return degree_; }
  const std::vector<Monomial>& borel_generators() const { return borel_; }
  const std::vector<Monomial>& minimal_generators() const { return minimal_; }

  /// Position of `gen` in minimal_generators(), if it is one.
  std::optional<std::size_t> index_of(const Monomial& gen) const;

  /// True iff some minimal generator divides m.
  bool contains(const Monomial& m) const;

 private:
  friend StronglyStableIdeal borel_closure(std::span<const Monomial>, std::size_t);

  std::size_t num_vars_ = 0;
  Exponent degree_ = 0;
  std::vector<Monomial> borel_;
  std::vector<Monomial> minimal_;
};

/// Smallest strongly stable ideal containing `gens`.
///
/// Throws Error on an empty list, mixed degrees or a dimension mismatch.
StronglyStableIdeal borel_closure(std::span<const Monomial> gens, std::size_t num_vars);

enum class Region { M, N };

/// B_M / B_N split of B(M, N) for M = x_a x_b, N = x_c x_d with c < a <= b < d.
///
/// Indices are 0-based. A principal quadric ideal B(M) is also accepted; its
/// B_N is empty and `N` is absent.
struct TwoQuadricView {
  Monomial M;
  std::optional<Monomial> N;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  std::size_t d = 0;
  std::vector<Monomial> B_M;  // rlex-descending
  std::vector<Monomial> B_N;  // rlex-descending

  bool is_principal() const { return !N.has_value(); }
  /// Throws Error if `gen` is in neither region.
  Region region_of(const Monomial& gen) const;
};

/// Throws Error unless the ideal has one or two quadric Borel generators in
/// the ladder position c < a <= b < d.
TwoQuadricView region_partition(const StronglyStableIdeal& ideal);

/// Builds each ideal from its Borel generators and normalizes the collection.
///
/// Two ideals that both have two quadric Borel generators are put in the
/// order d_1 <= d_2 of the N-indices (a tie keeps the input order).
std::vector<StronglyStableIdeal> validate_collection(
    const std::vector<std::vector<Monomial>>& borel_generators, std::size_t num_vars);

}  // namespace borel_rees

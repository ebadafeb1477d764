#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "borel_rees/borel.hpp"
#include "borel_rees/presentation.hpp"
#include "borel_rees/reduction.hpp"

namespace borel_rees {

enum class OrderKind { Rlex, Mrlex, HeadTail };

/// How mrlex ranks B_N against B_M.
///
/// Block puts every B_N variable above every B_M variable. LiteralClause
/// ranks a B_N variable above a B_M variable only when its monomial is
/// rlex-larger, which for quadric ideals never happens and so collapses to rlex.
enum class MrlexVariant { Block, LiteralClause };

/// A total order on (part of) the presentation variables, extended to
/// presentation monomials as graded reverse lexicographic order.
class PresOrder {
 public:
  /// Variables of one ideal, by rlex on their generators.
  static PresOrder rlex(const Presentation& pres, std::size_t ideal);
  /// Variables of one two-quadric ideal: B_N block above B_M block.
  static PresOrder mrlex(const Presentation& pres, std::size_t ideal,
                         MrlexVariant variant = MrlexVariant::Block);
  /// Two ideals: ideal 0 by rlex, above ideal 1 by mrlex.
  static PresOrder head_tail(const Presentation& pres);

  OrderKind kind() const { return kind_; }
  bool in_domain(VarId v) const { return v < rank_.size() && rank_[v] >= 0; }
  /// 0 is the largest variable. Throws Error outside the domain.
  int rank(VarId v) const;

  /// greater means p is the larger variable.
  std::strong_ordering compare_vars(VarId p, VarId q) const;
  /// Degree first, then reverse lexicographic over the variable order.
  std::strong_ordering compare(const PresMonomial& a, const PresMonomial& b) const;
  /// Factors with multiplicity, largest first.
  std::vector<VarId> sorted_factors(const PresMonomial& u) const;
  /// Domain variables, largest first.
  const std::vector<VarId>& chain() const { return chain_; }

 private:
  PresOrder(OrderKind kind, std::size_t num_vars, std::vector<VarId> chain);

  OrderKind kind_;
  std::vector<int> rank_;
  std::vector<VarId> chain_;
};

using PresBinomial = MarkedBinomial<PresMonomial>;
using MixedBinomial = MarkedBinomial<MixedMonomial>;

/// Quadratic binomials T_u T_v - T_u' T_v' (uv = u'v') of one ideal, leads
/// chosen by the rlex-induced order.
std::vector<PresBinomial> build_G1(const Presentation& pres, std::size_t ideal);

/// As build_G1 with the mrlex-induced order. The ideal must be two-quadric.
std::vector<PresBinomial> build_G2(const Presentation& pres, std::size_t ideal,
                                   MrlexVariant variant = MrlexVariant::Block);

/// T_u Z_v - T_u' Z_v' across ideals 0 and 1 with uv = u'v'; the lead has the
/// mrlex-larger ideal-1 factor.
std::vector<PresBinomial> build_G3(const Presentation& pres);

/// G1 of ideal 0, G2 of ideal 1 and G3.
std::vector<PresBinomial> build_ht_basis(const Presentation& pres);

/// "g1" and "g2" (per ideal, concatenated), "g3" or "ht".
std::vector<PresBinomial> build_named_basis(const Presentation& pres, const std::string& name);

/// x_i T_u - x_j T_u' with x_i u = x_j u', i < j, over every ideal.
std::vector<MixedBinomial> build_syzygy_set(const Presentation& pres);

/// Syzygies followed by the fiber basis lifted with x-part 1.
std::vector<MixedBinomial> build_fiber_type_basis(const Presentation& pres,
                                                  const std::vector<PresBinomial>& fiber_gb);

/// Factors of a single-ideal monomial split by region, each block
/// rlex-descending, in the order the chosen order lists them.
struct StandardFactorization {
  std::vector<VarId> factors;
  std::vector<VarId> m_block;
  std::vector<VarId> n_block;
  std::optional<VarId> L_M;
  std::optional<VarId> L_N;
};

/// `n_first` = false lists B_M then B_N (rlex), true lists B_N then B_M (mrlex).
StandardFactorization standard_factorization(const Presentation& pres, std::size_t ideal,
                                             const TwoQuadricView& view, const PresMonomial& u,
                                             bool n_first);

/// rlex-smallest member of B_M (resp. B_N) dividing x.
struct RegionMinima {
  std::optional<Monomial> M_prime;
  std::optional<Monomial> N_prime;
};
RegionMinima region_minima(const TwoQuadricView& view, const Monomial& x);

/// All factors in B_M (type M), all in B_N (type N), or mixed.
enum class VertexType { M, N, Mixed };
VertexType vertex_type(const Presentation& pres, const TwoQuadricView& view,
                       const PresMonomial& u);

}  // namespace borel_rees

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "borel_rees/orders.hpp"
#include "borel_rees/presentation.hpp"
#include "borel_rees/reduction.hpp"

namespace borel_rees {

struct FiberFailure {
  MultiDegree mu;
  std::size_t vertices = 0;
  std::vector<PresMonomial> sinks;
  bool has_cycle = false;
};

template <class Mono>
struct MembershipFailure {
  Mono lhs;
  Mono rhs;
  std::optional<Mono> lhs_normal;
  std::optional<Mono> rhs_normal;
  std::string reason;
};

struct VerificationReport {
  std::string basis;
  std::size_t basis_size = 0;
  std::vector<Exponent> t_budget;
  std::size_t multidegrees_checked = 0;
  std::size_t largest_fiber = 0;
  std::vector<FiberFailure> failures;
  std::size_t oracle_binomials_checked = 0;
  /// Formatted "lhs -> nf vs rhs -> nf" lines.
  std::vector<std::string> oracle_failures;

  bool certified() const { return failures.empty() && oracle_failures.empty(); }
};

/// What a verify_gb observer sees for each nonempty fiber, in multidegree order.
struct FiberResult {
  MultiDegree mu;
  std::vector<PresMonomial> vertices;
  std::vector<PresMonomial> sinks;
  bool has_cycle = false;
};

struct VerifyOptions {
  /// 0 means std::thread::hardware_concurrency().
  std::size_t jobs = 1;
  /// Called sequentially after all fibers are processed.
  std::function<void(const FiberResult&)> observer;
  /// Called from worker threads (serialized) with (done, total).
  std::function<void(std::size_t, std::size_t)> progress;
};

/// Builds the fiber graph of every multidegree within the t-budget and
/// requires each nonempty one to be acyclic with a single sink.
VerificationReport verify_gb(const Presentation& pres, const std::vector<PresBinomial>& basis,
                             std::span<const Exponent> t_budget, const VerifyOptions& options = {});

/// Pairs of distinct monomials with equal image, grouped fiber by fiber.
template <class Mono>
struct KernelSpan {
  std::vector<std::pair<Mono, Mono>> pairs;
  std::size_t largest_fiber = 0;
};

/// Toric kernel of the fiber ring: every unordered pair within each fiber.
KernelSpan<PresMonomial> toric_kernel_span(const Presentation& pres,
                                           std::span<const Exponent> t_budget);

/// Kernel of the multi-Rees map restricted to m*u with deg(m) <= max_x_degree
/// and t-degrees(u) <= t_budget. Each group is a complete fiber.
KernelSpan<MixedMonomial> rees_kernel_span(const Presentation& pres, Exponent max_x_degree,
                                           std::span<const Exponent> t_budget);

template <class Mono>
struct MembershipResult {
  std::size_t checked = 0;
  std::vector<MembershipFailure<Mono>> failures;
  bool passed() const { return failures.empty(); }
};

/// A - B passes when both sides have the same normal form.
template <class Mono>
MembershipResult<Mono> check_membership(const std::vector<std::pair<Mono, Mono>>& pairs,
                                        const ReductionSystem<Mono>& sys, std::size_t step_limit);

struct ObstructionWitness {
  MultiDegree mu;
  /// Connected components under quadratic moves, each sorted, ordered by first element.
  std::vector<std::vector<PresMonomial>> components;
};

/// Components of one fiber under every degree-2 coincident-product swap.
std::vector<std::vector<PresMonomial>> quadratic_move_components(const Presentation& pres,
                                                                 const MultiDegree& mu);

/// A witness for every multidegree of total t-degree >= 3 within the budget
/// whose fiber falls apart under quadratic moves.
std::vector<ObstructionWitness> detect_obstructions(const Presentation& pres,
                                                    std::span<const Exponent> t_budget,
                                                    std::size_t jobs = 1);

enum class GateCase { A, B, C, SingleIdeal, KnownObstructed };

struct GateResult {
  GateCase verdict = GateCase::KnownObstructed;
  /// (g, d) pairs after sorting.
  std::vector<std::pair<int, int>> sorted;
  bool possibly_koszul() const { return verdict != GateCase::KnownObstructed; }
};

const char* gate_case_name(GateCase c);

/// Necessary conditions on (number of Borel generators, degree) per ideal.
/// Throws Error on length mismatch, empty input or entries < 1.
GateResult parameter_gate(const std::vector<int>& g, const std::vector<int>& d);

enum class Verdict { Certified, Obstructed, Inconclusive };
const char* verdict_name(Verdict v);
int exit_code(Verdict v);

struct KoszulReport {
  GateResult gate;
  std::optional<VerificationReport> verification;
  std::vector<ObstructionWitness> witnesses;
  Verdict verdict = Verdict::Inconclusive;
  std::string explanation;
};

/// Gate, obstruction search and, where an explicit quadratic basis is known
/// (one ideal with at most two quadric Borel generators, or two such ideals),
/// a bounded Groebner basis check.
KoszulReport koszul_report(const Presentation& pres, std::span<const Exponent> t_budget,
                           std::size_t jobs = 1);

}  // namespace borel_rees

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "borel_rees/io.hpp"
#include "borel_rees/reduction.hpp"

namespace borel_rees::catalog {

/// Free parameters of the shifted obstruction families (powers of the last variable).
struct Params {
  int a = 0;
  int b = 0;
  int c = 0;
};

/// A plain marked-binomial collection in x-variables with a starting monomial.
struct PlainExample {
  std::size_t n = 0;
  std::vector<MarkedBinomial<Monomial>> rules;
  Monomial start;
};

/// "two-sinks", "unique-sink" or "cycle".
PlainExample plain_example(const std::string& name);

/// B(x3^2, x2x5) in five variables.
IdealSpec single_pair_spec();
/// x1^2 x2^2 x3^2 x4 x5 t^4 for single_pair_spec().
MultiDegree single_pair_multidegree();

/// (B(x4x5, x2x6), B(x4^2, x3x6)) in six variables.
IdealSpec running_pair_spec();
/// x2 x3 x4^2 x5 x6 t1^2 t2 for running_pair_spec().
MultiDegree running_pair_multidegree();

/// A fiber that breaks apart under quadratic moves, with the two
/// factorizations expected in different components.
struct ObstructionExample {
  IdealSpec spec;
  std::vector<Exponent> t_budget;
  MultiDegree mu;
  /// (ideal index, generator) factors.
  std::vector<std::pair<std::size_t, Monomial>> lhs;
  std::vector<std::pair<std::size_t, Monomial>> rhs;
};

/// "triple-obstruction" (uses a, b, c), "quartic-obstruction" (a, b) or
/// "mixed-degree-obstruction" (a).
ObstructionExample obstruction_example(const std::string& name, const Params& p = {});

PresMonomial factors_to_pres(const Presentation& pres,
                             const std::vector<std::pair<std::size_t, Monomial>>& factors);

/// Every name accepted by run().
std::vector<std::string> names();

/// Deterministic text summary of a named example; throws Error on an unknown name.
std::string run(const std::string& name, const Params& p = {}, std::size_t jobs = 1);

/// File stem of the stored expectation, e.g. "cycle" or "triple-obstruction_a1_b0_c2".
std::string expectation_stem(const std::string& name, const Params& p);

}  // namespace borel_rees::catalog

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace borel_rees {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Exponent = std::int32_t;

/// A monomial x_1^{e_1} ... x_n^{e_n} stored as a dense exponent vector.
///
/// Variables are addressed 0-based in the API; the text syntax ("x1", "x2",
/// ...) is 1-based. The total degree is cached and always equals the sum of
/// the exponents.
class Monomial {
 public:
  Monomial() = default;

  /// The unit monomial in `num_vars` variables.
  explicit Monomial(std::size_t num_vars);

  /// Throws Error if any exponent is negative.
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial variable(std::size_t num_vars, std::size_t var, Exponent power = 1);

  std::size_t num_vars() const { return exps_.size(); }
  Exponent degree() const { return degree_; }
  Exponent operator[](std::size_t var) const { return exps_[var]; }
  std::span<const Exponent> exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  /// Index of the largest variable with a nonzero exponent, or num_vars() for 1.
  std::size_t last_variable() const;

  std::size_t hash() const;

  bool operator==(const Monomial&) const = default;
  /// Storage order only (lexicographic on exponent vectors); use rlex_compare
  /// for the monomial order.
  auto operator<=>(const Monomial&) const = default;

 private:
  friend Monomial multiply(const Monomial&, const Monomial&);
  friend Monomial quotient(const Monomial&, const Monomial&);
  friend Monomial one_step_reduction(const Monomial&, std::size_t, std::size_t);

  std::vector<Exponent> exps_;
  Exponent degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Componentwise sum. Throws Error on mismatched ambient dimension.
Monomial multiply(const Monomial& a, const Monomial& b);

/// True iff a divides b.
bool divides(const Monomial& a, const Monomial& b);

/// b / a. Throws Error unless a divides b.
Monomial quotient(const Monomial& b, const Monomial& a);

/// Graded reverse lexicographic order with x_1 > x_2 > ... > x_n.
///
/// Higher degree is greater; within a degree, a > b iff the last nonzero
/// entry of exponents(a) - exponents(b) is negative.
std::strong_ordering rlex_compare(const Monomial& a, const Monomial& b);

/// x_to * m / x_from. Requires to < from and x_from | m.
Monomial one_step_reduction(const Monomial& m, std::size_t from, std::size_t to);

/// True iff m1 is reachable from m2 by one-step strongly stable reductions.
///
/// Uses the dominance criterion: for every k, the first k exponents of m1
/// sum to at least those of m2. Throws Error on a degree mismatch.
bool strongly_stable_precedes(const Monomial& m1, const Monomial& m2);

/// All monomials of degree `degree` in `num_vars` variables, rlex-descending.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, Exponent degree);

/// Bit (v mod 64) set for every variable v in the support.
std::uint64_t support_mask(const Monomial& m);

}  // namespace borel_rees

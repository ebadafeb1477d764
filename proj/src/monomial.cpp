#include "borel_rees/monomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace borel_rees {

namespace {

void require_same_dimension(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw Error("monomials live in different polynomial rings (" +
                std::to_string(a.num_vars()) + " vs " + std::to_string(b.num_vars()) +
                " variables)");
  }
}

}  // namespace

Monomial::Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  for (Exponent e : exps_) {
    if (e < 0) throw Error("negative exponent in monomial");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t var, Exponent power) {
  if (var >= num_vars) throw Error("variable index out of range");
  std::vector<Exponent> e(num_vars, 0);
  e[var] = power;
  return Monomial(std::move(e));
}

std::size_t Monomial::last_variable() const {
  for (std::size_t i = exps_.size(); i-- > 0;) {
    if (exps_[i] != 0) return i;
  }
  return exps_.size();
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : exps_) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  require_same_dimension(a, b);
  Monomial out = a;
  for (std::size_t i = 0; i < a.num_vars(); ++i) out.exps_[i] += b.exps_[i];
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_dimension(a, b);
  if (a.degree() > b.degree()) return false;
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw Error("quotient requested for a non-divisor");
  Monomial out = b;
  for (std::size_t i = 0; i < a.num_vars(); ++i) out.exps_[i] -= a.exps_[i];
  out.degree_ = b.degree_ - a.degree_;
  return out;
}

std::strong_ordering rlex_compare(const Monomial& a, const Monomial& b) {
  require_same_dimension(a, b);
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.num_vars(); i-- > 0;) {
    if (a[i] != b[i]) {
      // Last nonzero entry of a - b negative means a is greater.
      return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

Monomial one_step_reduction(const Monomial& m, std::size_t from, std::size_t to) {
  if (from >= m.num_vars() || to >= m.num_vars()) throw Error("variable index out of range");
  if (to >= from) throw Error("one-step reduction must move to a smaller variable index");
  if (m[from] == 0) {
    throw Error("x" + std::to_string(from + 1) + " does not divide the monomial");
  }
  Monomial out = m;
  --out.exps_[from];
  ++out.exps_[to];
  return out;
}

bool strongly_stable_precedes(const Monomial& m1, const Monomial& m2) {
  require_same_dimension(m1, m2);
  if (m1.degree() != m2.degree()) {
    throw Error("strongly stable order compares monomials of equal degree only");
  }
  Exponent prefix1 = 0;
  Exponent prefix2 = 0;
  for (std::size_t k = 0; k < m1.num_vars(); ++k) {
    prefix1 += m1[k];
    prefix2 += m2[k];
    if (prefix1 < prefix2) return false;
  }
  return true;
}

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, Exponent degree) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back(std::size_t{0});
    return out;
  }
  std::vector<Exponent> e(num_vars, 0);
  std::function<void(std::size_t, Exponent)> rec = [&](std::size_t var, Exponent left) {
    if (var + 1 == num_vars) {
      e[var] = left;
      out.emplace_back(e);
      return;
    }
    for (Exponent k = 0; k <= left; ++k) {
      e[var] = k;
      rec(var + 1, left - k);
    }
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return rlex_compare(a, b) > 0; });
  return out;
}

std::uint64_t support_mask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] != 0) mask |= std::uint64_t{1} << (i % 64);
  }
  return mask;
}

}  // namespace borel_rees

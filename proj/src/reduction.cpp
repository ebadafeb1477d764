#include "borel_rees/reduction.hpp"

#include <cstdlib>

namespace borel_rees {

const char* source_name(BasisSource s) {
  switch (s) {
    case BasisSource::G1: return "G1";
    case BasisSource::G2: return "G2";
    case BasisSource::G3: return "G3";
    case BasisSource::Syzygy: return "SYZ";
    case BasisSource::Plain: break;
  }
  return "PLAIN";
}

std::size_t default_step_limit(std::size_t fiber_size) {
  if (const char* env = std::getenv("BOREL_REES_STEP_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fiber_size * fiber_size + 16;
}

Exponent o_invariant(const MixedMonomial& mu, const Presentation& pres) {
  Monomial alpha = pres.content(mu.t);
  const std::size_t n = alpha.num_vars();
  // suffix[q] = alpha_{q+1} + ... + alpha_{n-1}
  std::vector<Exponent> suffix(n, 0);
  for (std::size_t q = n; q-- > 1;) suffix[q - 1] = suffix[q] + alpha[q];
  Exponent o = 0;
  for (std::size_t q = 0; q < n; ++q) o += mu.x[q] * suffix[q];
  return o;
}

}  // namespace borel_rees

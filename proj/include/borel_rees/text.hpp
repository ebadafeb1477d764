#pragma once

#include <string>
#include <string_view>

#include "borel_rees/monomial.hpp"
#include "borel_rees/presentation.hpp"

namespace borel_rees {

/// Malformed text; `position` is the 0-based offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Accepts "x2*x5", "x4^2", "x2x5", "1" and exponent vectors "[0,1,0,0,1]".
Monomial parse_monomial(std::string_view text, std::size_t num_vars);

/// "x2*x5", "x4^2", "1".
std::string format_monomial(const Monomial& m);

/// "[0,1,0,0,1]".
std::string format_exponents(const Monomial& m);

/// Indexed: T[1]{x2*x5}. Short: T{..} for ideal 1 and Z{..} for ideal 2.
enum class VarStyle { Indexed, Short };

/// Short style when the presentation has at most two ideals.
VarStyle default_style(const Presentation& pres);

std::string format_var(const Presentation& pres, VarId v, VarStyle style);

/// Factors in storage order joined by '*', powers as ^k; "1" for the unit.
std::string format_pres(const Presentation& pres, const PresMonomial& u, VarStyle style);
std::string format_pres(const Presentation& pres, const PresMonomial& u);

/// x-part first, then the presentation factors.
std::string format_mixed(const Presentation& pres, const MixedMonomial& m);

/// Accepts both styles, e.g. "T{x2*x6}*T{x3*x5}*Z{x4^2}" or "T[1]{x1x5}^2".
PresMonomial parse_pres(const Presentation& pres, std::string_view text);

/// As parse_pres, with ordinary variables allowed: "x1*T{x2*x3}".
MixedMonomial parse_mixed(const Presentation& pres, std::string_view text);

/// "x1^2*x2*t1^2*t2"; t and z stand for t1 and t2.
MultiDegree parse_multidegree(std::string_view text, std::size_t num_vars, std::size_t num_ideals);
std::string format_multidegree(const MultiDegree& mu);

}  // namespace borel_rees

#include "borel_rees/text.hpp"

#include <cctype>

namespace borel_rees {

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(message + " (at position " + std::to_string(position) + ")"), position_(position) {}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;
  std::size_t base = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, base + pos); }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  long number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s[pos++] - '0');
      if (v > 1'000'000) fail("number too large");
    }
    return v;
  }
  Exponent power() {
    if (peek() != '^') return 1;
    ++pos;
    return static_cast<Exponent>(number());
  }
  /// Skips whitespace and an optional '*'; true if another factor follows.
  bool separator() {
    skip_ws();
    if (peek() == '*') {
      ++pos;
      skip_ws();
      if (done()) fail("dangling '*'");
      return true;
    }
    return !done();
  }
  bool is_unit() {
    skip_ws();
    if (peek() != '1') return false;
    std::size_t save = pos++;
    skip_ws();
    if (done()) return true;
    pos = save;
    return false;
  }
};

std::size_t x_index(Cursor& c, std::size_t num_vars) {
  std::size_t at = c.pos;
  long k = c.number();
  if (k < 1 || static_cast<std::size_t>(k) > num_vars) {
    c.pos = at;
    c.fail("variable x" + std::to_string(k) + " out of range 1.." + std::to_string(num_vars));
  }
  return static_cast<std::size_t>(k - 1);
}

Monomial parse_vector(Cursor& c, std::size_t num_vars) {
  c.expect('[');
  std::vector<Exponent> e;
  c.skip_ws();
  while (c.peek() != ']') {
    c.skip_ws();
    e.push_back(static_cast<Exponent>(c.number()));
    c.skip_ws();
    if (c.peek() == ',') {
      ++c.pos;
    } else if (c.peek() != ']') {
      c.fail("expected ',' or ']'");
    }
  }
  ++c.pos;
  c.skip_ws();
  if (!c.done()) c.fail("trailing characters");
  if (e.size() != num_vars) {
    c.fail("exponent vector has " + std::to_string(e.size()) + " entries, expected " +
           std::to_string(num_vars));
  }
  return Monomial(std::move(e));
}

Monomial parse_monomial_at(std::string_view text, std::size_t num_vars, std::size_t base) {
  Cursor c{text, 0, base};
  c.skip_ws();
  if (c.peek() == '[') return parse_vector(c, num_vars);
  std::vector<Exponent> e(num_vars, 0);
  if (c.is_unit()) return Monomial(std::move(e));
  if (c.done()) c.fail("empty monomial");
  do {
    if (c.peek() != 'x') c.fail("expected a variable like x3");
    ++c.pos;
    std::size_t i = x_index(c, num_vars);
    e[i] += c.power();
  } while (c.separator());
  return Monomial(std::move(e));
}

std::string power_suffix(Exponent k) { return k == 1 ? "" : "^" + std::to_string(k); }

// Shared grammar for presentation, mixed and multidegree text.
struct FactorParser {
  const Presentation* pres = nullptr;
  std::size_t num_vars = 0;
  std::size_t num_ideals = 0;
  bool allow_x = true;
  bool allow_pres = false;
  bool allow_t = false;

  std::vector<Exponent> x;
  std::vector<Exponent> pres_counts;
  std::vector<Exponent> t;

  void run(std::string_view text) {
    x.assign(num_vars, 0);
    pres_counts.assign(pres ? pres->num_vars() : 0, 0);
    t.assign(num_ideals, 0);
    Cursor c{text, 0, 0};
    if (c.is_unit()) return;
    c.skip_ws();
    if (c.done()) c.fail("empty monomial");
    do {
      char ch = c.peek();
      if (ch == 'x' && allow_x) {
        ++c.pos;
        std::size_t i = x_index(c, num_vars);
        x[i] += c.power();
      } else if ((ch == 'T' || ch == 'Z') && allow_pres) {
        pres_var(c);
      } else if ((ch == 't' || ch == 'z') && allow_t) {
        ++c.pos;
        std::size_t ideal = ch == 'z' ? 1 : 0;
        if (ch == 't' && std::isdigit(static_cast<unsigned char>(c.peek()))) {
          std::size_t at = c.pos;
          long k = c.number();
          if (k < 1 || static_cast<std::size_t>(k) > num_ideals) {
            c.pos = at;
            c.fail("grading variable t" + std::to_string(k) + " out of range");
          }
          ideal = static_cast<std::size_t>(k - 1);
        }
        if (ideal >= num_ideals) c.fail("grading variable out of range");
        t[ideal] += c.power();
      } else {
        c.fail(std::string("unexpected character '") + ch + "'");
      }
    } while (c.separator());
  }

  void pres_var(Cursor& c) {
    char ch = c.s[c.pos++];
    std::size_t ideal = ch == 'Z' ? 1 : 0;
    if (ch == 'T' && c.peek() == '[') {
      ++c.pos;
      std::size_t at = c.pos;
      long k = c.number();
      if (k < 1 || static_cast<std::size_t>(k) > pres->num_ideals()) {
        c.pos = at;
        c.fail("ideal index " + std::to_string(k) + " out of range");
      }
      ideal = static_cast<std::size_t>(k - 1);
      c.expect(']');
    }
    if (ideal >= pres->num_ideals()) c.fail("Z variables need a second ideal");
    c.expect('{');
    std::size_t open = c.pos;
    std::size_t close = c.s.find('}', open);
    if (close == std::string_view::npos) c.fail("unterminated '{'");
    Monomial g = parse_monomial_at(c.s.substr(open, close - open), pres->ambient_vars(),
                                   c.base + open);
    auto v = pres->find_var(ideal, g);
    if (!v) {
      c.fail(format_monomial(g) + " is not a minimal generator of ideal " +
             std::to_string(ideal + 1));
    }
    c.pos = close + 1;
    pres_counts[*v] += c.power();
  }
};

}  // namespace

Monomial parse_monomial(std::string_view text, std::size_t num_vars) {
  return parse_monomial_at(text, num_vars, 0);
}

std::string format_monomial(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1) + power_suffix(m[i]);
  }
  return out;
}

std::string format_exponents(const Monomial& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (i) out += ',';
    out += std::to_string(m[i]);
  }
  return out + "]";
}

VarStyle default_style(const Presentation& pres) {
  return pres.num_ideals() <= 2 ? VarStyle::Short : VarStyle::Indexed;
}

std::string format_var(const Presentation& pres, VarId v, VarStyle style) {
  PresVar pv = pres.var(v);
  std::string head;
  if (style == VarStyle::Short && pv.ideal < 2) {
    head = pv.ideal == 0 ? "T" : "Z";
  } else {
    head = "T[" + std::to_string(pv.ideal + 1) + "]";
  }
  return head + "{" + format_monomial(pres.generator(v)) + "}";
}

std::string format_pres(const Presentation& pres, const PresMonomial& u, VarStyle style) {
  if (u.degree() == 0) return "1";
  std::string out;
  for (VarId v = 0; v < u.num_pres_vars(); ++v) {
    Exponent k = u.count(v);
    if (k == 0) continue;
    if (!out.empty()) out += '*';
    out += format_var(pres, v, style) + power_suffix(k);
  }
  return out;
}

std::string format_pres(const Presentation& pres, const PresMonomial& u) {
  return format_pres(pres, u, default_style(pres));
}

std::string format_mixed(const Presentation& pres, const MixedMonomial& m) {
  if (m.x.is_one()) return format_pres(pres, m.t);
  if (m.t.degree() == 0) return format_monomial(m.x);
  return format_monomial(m.x) + "*" + format_pres(pres, m.t);
}

PresMonomial parse_pres(const Presentation& pres, std::string_view text) {
  FactorParser p;
  p.pres = &pres;
  p.num_vars = pres.ambient_vars();
  p.allow_x = false;
  p.allow_pres = true;
  p.run(text);
  return PresMonomial(Monomial(std::move(p.pres_counts)));
}

MixedMonomial parse_mixed(const Presentation& pres, std::string_view text) {
  FactorParser p;
  p.pres = &pres;
  p.num_vars = pres.ambient_vars();
  p.allow_pres = true;
  p.run(text);
  return {Monomial(std::move(p.x)), PresMonomial(Monomial(std::move(p.pres_counts)))};
}

MultiDegree parse_multidegree(std::string_view text, std::size_t num_vars,
                              std::size_t num_ideals) {
  FactorParser p;
  p.num_vars = num_vars;
  p.num_ideals = num_ideals;
  p.allow_t = true;
  p.run(text);
  return {Monomial(std::move(p.x)), std::move(p.t)};
}

std::string format_multidegree(const MultiDegree& mu) {
  std::string out = mu.x.is_one() ? "" : format_monomial(mu.x);
  for (std::size_t i = 0; i < mu.t.size(); ++i) {
    if (mu.t[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 't' + std::to_string(i + 1) + power_suffix(mu.t[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace borel_rees

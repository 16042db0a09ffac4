#pragma once

#include <gmpxx.h>

#include <string>

#include "twistcoh/errors.hpp"

namespace twistcoh {

// Exact rational scalar. gmp keeps values canonical (lowest terms, positive
// denominator) as long as they enter canonical, so every construction from
// user data must go through parse_rational / make_rational below.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "p/q", optional leading '+', arbitrary precision.
inline Rational parse_rational(const std::string& text) {
  std::string s = text;
  // trim ascii whitespace
  const char* ws = " \t\n\r";
  const auto a = s.find_first_not_of(ws);
  const auto b = s.find_last_not_of(ws);
  if (a == std::string::npos) throw ParseError("empty rational literal");
  s = s.substr(a, b - a + 1);
  if (!s.empty() && s[0] == '+') s = s.substr(1);
  Rational r;
  try {
    r = Rational(s, 10);
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid rational literal: \"" + text + "\"");
  }
  if (r.get_den() == 0) throw ParseError("zero denominator in rational literal: \"" + text + "\"");
  r.canonicalize();
  return r;
}

// "p/q" with "/q" omitted when q == 1 (the canonical form gmp prints).
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace twistcoh

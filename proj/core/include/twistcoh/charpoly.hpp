#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twistcoh/matrix.hpp"

namespace twistcoh {

// Polynomial with ascending coefficients: p[i] is the coefficient of x^i.
using Poly = std::vector<Rational>;

// Monic char poly det(x I - A), Faddeev-LeVerrier recurrence. {1} for 0x0.
Poly char_poly(const Matrix& a);  // throws NonSquare

Rational poly_eval(const Poly& p, const Rational& x);
std::size_t poly_degree(const Poly& p);
std::string poly_to_string(const Poly& p);  // e.g. "x^2 - 2"

struct CharPolyFactorization {
  Poly polynomial;                                             // monic
  std::vector<std::pair<Rational, std::size_t>> rational_roots;  // ascending, with multiplicity
  Poly residual;                                               // monic, no rational roots; {1} if split
};

// All rational roots with multiplicity (rational-root theorem on the
// primitive integer polynomial, exact deflation), residual factor reported.
CharPolyFactorization char_poly_rational_roots(const Matrix& m);

}  // namespace twistcoh

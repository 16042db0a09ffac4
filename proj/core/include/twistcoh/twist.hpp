#pragma once

#include "twistcoh/errors.hpp"
#include "twistcoh/lie_algebra.hpp"

namespace twistcoh {

// A 1-form in dual-basis coordinates.
using Covector = Vec;

inline Rational covector_apply(const Covector& w, const Vec& x) {
  Rational acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0 && x[i] != 0) acc += w[i] * x[i];
  return acc;
}

// dw = 0 amounts to w killing every bracket: (dw)(x,y) = w([x,y]).
inline bool is_closed_one_form(const LieAlgebra& L, const Covector& w) {
  if (w.size() != L.dim()) throw Error("1-form has wrong length");
  for (const auto& [key, value] : L.brackets())
    if (covector_apply(w, value) != 0) return false;
  return true;
}

// The deformation datum λ·ω. Closedness of ω is enforced at construction,
// never silently assumed.
struct Twist {
  Covector omega;
  Rational lambda;
  Covector effective;  // λ·ω

  Twist(const LieAlgebra& L, Covector omega_, Rational lambda_)
      : omega(std::move(omega_)), lambda(std::move(lambda_)) {
    if (!is_closed_one_form(L, omega)) throw OmegaNotClosed("twist 1-form is not closed");
    effective.resize(omega.size());
    for (std::size_t i = 0; i < omega.size(); ++i) effective[i] = lambda * omega[i];
  }

  static Twist untwisted(const LieAlgebra& L) { return Twist(L, Covector(L.dim()), Rational(0)); }

  bool effective_zero() const { return is_zero_vec(effective); }
};

}  // namespace twistcoh

#pragma once

#include "twistcoh/exterior.hpp"
#include "twistcoh/lie_algebra.hpp"
#include "twistcoh/twist.hpp"

namespace twistcoh {

// d_q : Λ^q → Λ^{q+1} as a matrix over the lexicographic monomial bases.
struct DifferentialMatrix {
  std::size_t degree = 0;  // q
  Matrix matrix;           // C(n,q+1) × C(n,q)
  Twist twist;
};

// Left-multiplication by the 1-form w, Λ^q → Λ^{q+1}.
Matrix wedge_one_form_matrix(std::size_t n, std::size_t q, const Covector& w);

// Interior product ι_x, Λ^q → Λ^{q-1}.
Matrix contraction_matrix(std::size_t n, std::size_t q, const Vec& x);

// Extension of a linear map on 1-form coordinates (alpha ↦ m·alpha) to Λ^q
// as a degree-zero derivation: act on one tensor slot at a time, no signs.
Matrix derivation_matrix(const Matrix& m, const MonomialBasis& basis);

// Structure-constant route: d is the graded derivation with
// d w^k = Σ_{i<j} c_{ij}^k w^i ∧ w^j on generators, plus λ w ∧ (·).
DifferentialMatrix differential_wedge_form(const LieAlgebra& L, std::size_t q, const Twist& t);

// Evaluation route: compute (d f)(x_{t_1}, …, x_{t_{q+1}}) directly from the
// alternating-sum formula with the rank-one action ξ ↦ λ w(ξ). Kept separate
// from the wedge route so the two can cross-check each other.
DifferentialMatrix differential_rep_form(const LieAlgebra& L, std::size_t q, const Twist& t);

}  // namespace twistcoh

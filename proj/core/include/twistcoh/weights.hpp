#pragma once

#include <tuple>
#include <vector>

#include "twistcoh/cohomology.hpp"

namespace twistcoh {

// One row of the triangular structure equations in the adapted basis: the
// differential of the j-th new dual form is α'_j ∧ ω'_j plus a quadratic tail
// supported on strictly earlier dual forms.
struct StructureEquation {
  std::size_t j = 0;  // 1-based adapted index, j > k
  Vec alpha_primed;   // coefficients of α'_j on ω'_1..ω'_n (zero from j on)
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> quadratic;  // (a, b, coeff), b < j
};

// Change of basis splitting g into a complement of [g,g] (first k columns)
// followed by a flag basis of [g,g]: every tail span of flag vectors is
// invariant under every ad(x), which is what makes the weights diagonal.
struct AdaptedBasis {
  Matrix change_of_basis;  // n×n invertible, columns = adapted basis
  std::size_t k = 0;       // n - dim [g,g]
  std::vector<Covector> weights;  // α_{k+1}..α_n in the ORIGINAL dual coords, flag order
  std::vector<StructureEquation> equations;
};

// Constructive simultaneous triangularization of ad(g) on [g,g] over ℚ.
// Throws NotSolvable, or RationalSpectrumRequired when a needed eigenvalue is
// irrational (the residual char-poly factor rides along in the exception).
// The returned structure equations are recomputed from the transformed
// algebra and verified for the triangular shape before returning.
AdaptedBasis adapted_basis(const LieAlgebra& L);

// All nonempty subset sums of the weights, deduplicated, sorted
// lexicographically. Empty for abelian algebras; {0} for nonabelian
// nilpotent ones (every weight is zero).
std::vector<Covector> omega_set(const std::vector<Covector>& weights);

// Members of the sum set certified nontrivial: θ ≠ 0 such that the twist with
// λω = -θ has a nonzero Betti table. Direct evaluation is the definition.
std::vector<Covector> omega_tilde(const LieAlgebra& L, const std::vector<Covector>& omega_set);

struct WeightSystem {
  AdaptedBasis basis;
  std::vector<Covector> weights;      // same as basis.weights
  std::vector<Covector> omega_set;    // Ω_g
  std::vector<Covector> omega_tilde;  // ~Ω_g ⊆ Ω_g
  Covector sum_of_all;                // zero iff unimodular, cross-checked in tests
};

WeightSystem weight_system(const LieAlgebra& L);

// Probes must satisfy -λω ∉ {0} ∪ Ω_g (else ProbeInExceptionalSet); each one
// is then required to produce the all-zero table.
struct VanishingVerdict {
  Twist twist;
  bool all_zero = false;
};

struct VanishingReport {
  std::vector<VanishingVerdict> verdicts;
  bool pass = true;
};

VanishingReport verify_vanishing(const LieAlgebra& L, const std::vector<Twist>& probes,
                                 const std::vector<Covector>& omega_set);

}  // namespace twistcoh

#pragma once

#include <string>
#include <vector>

#include "twistcoh/differential.hpp"

namespace twistcoh {

struct BettiTable {
  Twist twist;
  std::vector<std::size_t> betti;  // degrees 0..n
  long long euler = 0;

  bool all_zero() const {
    for (auto b : betti)
      if (b != 0) return false;
    return true;
  }
};

BettiTable betti(const LieAlgebra& L, const Twist& t);

// Echelonized cocycle representatives for H^q, one per Betti unit: kernel of
// d_q reduced modulo the image of d_{q-1}.
struct CohomologySpace {
  std::size_t degree = 0;
  std::size_t dimension = 0;
  std::vector<Vec> representatives;
};

CohomologySpace cohomology_space(const LieAlgebra& L, const Twist& t, std::size_t q);

// Betti tables along the pencil λ ↦ λ·omega, one per requested λ.
std::vector<BettiTable> scan_line(const LieAlgebra& L, const Covector& omega,
                                  const std::vector<Rational>& lambdas);

// Summary of the pencil through omega: a generic sample value (picked off the
// candidate list and, if supplied, off the exceptional covector set), the
// candidate values whose table is nonzero, and degreewise maxima usable as
// critical-point lower bounds for circle-valued Morse theory.
struct NovikovReport {
  Covector omega;
  Rational generic_lambda;
  BettiTable generic;
  std::vector<BettiTable> exceptional;  // each carries its λ in twist.lambda
  std::vector<std::size_t> morse_lower_bounds;
  std::string note;
};

NovikovReport novikov_report(const LieAlgebra& L, const Covector& omega,
                             std::vector<Rational> candidate_lambdas,
                             const std::vector<Covector>& exceptional_covectors = {});

}  // namespace twistcoh

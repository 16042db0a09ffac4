#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twistcoh/linalg.hpp"
#include "twistcoh/matrix.hpp"

namespace twistcoh {

// Finite-dimensional Lie algebra given by rational structure constants.
// Only pairs i < j (0-based) are stored; [e_j, e_i] = -[e_i, e_j] is
// structural. Jacobi is NOT enforced here — jacobi_check reports on it, and
// validated constructors (zoo, CLI load path) are expected to pass it.
class LieAlgebra {
 public:
  using BracketMap = std::map<std::pair<std::size_t, std::size_t>, Vec>;

  LieAlgebra(std::size_t dim, BracketMap brackets, std::vector<std::string> basis_names = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const BracketMap& brackets() const { return brackets_; }

  // c_{ij}^k for any i, j (antisymmetry applied; zero when i == j).
  Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

  Vec bracket_basis(std::size_t i, std::size_t j) const;  // [e_i, e_j]
  Vec bracket(const Vec& x, const Vec& y) const;

  Matrix ad(const Vec& x) const;  // columns [x, e_j]
  Matrix ad_basis(std::size_t i) const;

 private:
  std::size_t dim_;
  BracketMap brackets_;
  std::vector<std::string> basis_names_;
};

struct JacobiViolation {
  std::size_t i, j, k;  // 0-based triple i < j < k
  Vec residual;         // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
};

struct JacobiReport {
  bool pass = true;
  std::vector<JacobiViolation> violations;
};

JacobiReport jacobi_check(const LieAlgebra& L);

// Echelonized deterministic basis of [g, g].
std::vector<Vec> derived_subalgebra(const LieAlgebra& L);

bool is_unimodular(const LieAlgebra& L);

struct Classification {
  bool nilpotent = false;
  bool solvable = false;
};

Classification classify(const LieAlgebra& L);
std::string classification_label(const Classification& c);  // "nilpotent" | "solvable" | "non-solvable"

// Structure constants in the basis given by the columns of p.
LieAlgebra change_basis(const LieAlgebra& L, const Matrix& p);

}  // namespace twistcoh

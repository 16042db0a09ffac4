#pragma once

#include <optional>
#include <vector>

#include "twistcoh/matrix.hpp"

namespace twistcoh {

// Reduced row echelon form with deterministic pivoting: for each column in
// order, the first row (top to bottom) with a nonzero entry becomes the pivot.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;  // ascending
};

Echelon reduced_row_echelon(Matrix m);

std::size_t rank(const Matrix& m);

// Right null space, one vector per free column (ascending), each normalized
// so its first nonzero entry is 1.
std::vector<Vec> kernel_basis(const Matrix& m);

// One exact solution of m x = b with free variables set to zero, or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Nonzero rows of the RREF: deterministic echelon basis of the row space.
std::vector<Vec> row_space_basis(const Matrix& m);
std::vector<Vec> column_space_basis(const Matrix& m);

Rational determinant(const Matrix& m);  // throws NonSquare
Matrix inverse(const Matrix& m);        // throws NonSquare / Error if singular

// Eliminates the pivot coordinates of v against echelon rows (each row's
// first nonzero entry is assumed to be a leading 1).
Vec reduce_against(Vec v, const std::vector<Vec>& echelon_rows);

}  // namespace twistcoh

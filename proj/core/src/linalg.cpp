#include "twistcoh/linalg.hpp"

#include <algorithm>

#include "twistcoh/errors.hpp"

namespace twistcoh {

Echelon reduced_row_echelon(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m.at(p, c) == 0) ++p;
    if (p == rows) continue;  // zero pivot column: skip
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    const Rational inv = 1 / m.at(r, c);
    for (std::size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Rational f = m.at(i, c);
      for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return reduced_row_echelon(m).pivot_cols.size(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
  const auto ech = reduced_row_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r)
      v[ech.pivot_cols[r]] = -ech.reduced.at(r, f);
    // normalize: first nonzero entry = 1
    for (std::size_t i = 0; i < cols; ++i) {
      if (v[i] == 0) continue;
      if (v[i] != 1) {
        const Rational inv = 1 / v[i];
        for (std::size_t j = i; j < cols; ++j) v[j] *= inv;
      }
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (b.size() != rows) throw Error("solve: rhs length mismatch");
  Matrix aug(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, cols) = b[i];
  }
  const auto ech = reduced_row_echelon(std::move(aug));
  if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == cols) return std::nullopt;
  Vec x(cols);
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) x[ech.pivot_cols[r]] = ech.reduced.at(r, cols);
  return x;
}

std::vector<Vec> row_space_basis(const Matrix& m) {
  const auto ech = reduced_row_echelon(m);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) rows.push_back(ech.reduced.row(r));
  return rows;
}

std::vector<Vec> column_space_basis(const Matrix& m) { return row_space_basis(m.transpose()); }

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw NonSquare("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a.at(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
      det = -det;
    }
    det *= a.at(c, c);
    const Rational inv = 1 / a.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a.at(i, c) == 0) continue;
      const Rational f = a.at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw NonSquare("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto ech = reduced_row_echelon(std::move(aug));
  if (ech.pivot_cols.size() < n || ech.pivot_cols[n - 1] != n - 1) throw Error("inverse of singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = ech.reduced.at(i, n + j);
  return inv;
}

Vec reduce_against(Vec v, const std::vector<Vec>& echelon_rows) {
  for (const auto& row : echelon_rows) {
    std::size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    if (lead == row.size()) continue;
    if (v[lead] == 0) continue;
    const Rational f = v[lead] / row[lead];
    for (std::size_t j = lead; j < v.size(); ++j) v[j] -= f * row[j];
  }
  return v;
}

}  // namespace twistcoh

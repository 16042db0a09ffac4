#include "twistcoh/lie_algebra.hpp"

#include "twistcoh/errors.hpp"

namespace twistcoh {

LieAlgebra::LieAlgebra(std::size_t dim, BracketMap brackets, std::vector<std::string> basis_names)
    : dim_(dim), brackets_(std::move(brackets)), basis_names_(std::move(basis_names)) {
  // dim 0 is legal here (kernels of 1-forms on a line); input files reject it.
  for (const auto& [key, value] : brackets_) {
    if (key.first >= key.second || key.second >= dim_)
      throw Error("bracket index pair out of range or not ordered");
    if (value.size() != dim_) throw Error("bracket coefficient vector has wrong length");
  }
  if (basis_names_.empty()) {
    basis_names_.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) basis_names_.push_back("e" + std::to_string(i + 1));
  }
  if (basis_names_.size() != dim_) throw Error("basis name list has wrong length");
}

Rational LieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return 0;
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  const auto it = brackets_.find({i, j});
  if (it == brackets_.end()) return 0;
  return flip ? Rational(-it->second[k]) : it->second[k];
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec out(dim_);
  if (i == j) return out;
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  const auto it = brackets_.find({i, j});
  if (it == brackets_.end()) return out;
  for (std::size_t k = 0; k < dim_; ++k) out[k] = flip ? Rational(-it->second[k]) : it->second[k];
  return out;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error("bracket argument has wrong length");
  Vec out(dim_);
  for (const auto& [key, value] : brackets_) {
    const auto [i, j] = key;
    const Rational c = x[i] * y[j] - x[j] * y[i];
    if (c == 0) continue;
    for (std::size_t k = 0; k < dim_; ++k)
      if (value[k] != 0) out[k] += c * value[k];
  }
  return out;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec ej(dim_);
    ej[j] = 1;
    const Vec col = bracket(x, ej);
    for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const {
  Vec ei(dim_);
  ei[i] = 1;
  return ad(ei);
}

JacobiReport jacobi_check(const LieAlgebra& L) {
  JacobiReport report;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec ei(n), ej(n), ek(n);
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        Vec sum = L.bracket(ei, L.bracket(ej, ek));
        const Vec t2 = L.bracket(ej, L.bracket(ek, ei));
        const Vec t3 = L.bracket(ek, L.bracket(ei, ej));
        for (std::size_t m = 0; m < n; ++m) sum[m] += t2[m] + t3[m];
        if (!is_zero_vec(sum)) {
          report.pass = false;
          report.violations.push_back({i, j, k, std::move(sum)});
        }
      }
  return report;
}

std::vector<Vec> derived_subalgebra(const LieAlgebra& L) {
  std::vector<Vec> gens;
  for (const auto& [key, value] : L.brackets())
    if (!is_zero_vec(value)) gens.push_back(value);
  if (gens.empty()) return {};
  return row_space_basis(Matrix::from_rows(gens, L.dim()));
}

bool is_unimodular(const LieAlgebra& L) {
  for (std::size_t i = 0; i < L.dim(); ++i) {
    const Matrix adi = L.ad_basis(i);
    Rational tr = 0;
    for (std::size_t k = 0; k < L.dim(); ++k) tr += adi.at(k, k);
    if (tr != 0) return false;
  }
  return true;
}

namespace {

// span of [x, s] over x in the first list, s in the second; echelon basis
std::vector<Vec> bracket_span(const LieAlgebra& L, const std::vector<Vec>& xs, const std::vector<Vec>& ys) {
  std::vector<Vec> gens;
  for (const auto& x : xs)
    for (const auto& y : ys) {
      Vec b = L.bracket(x, y);
      if (!is_zero_vec(b)) gens.push_back(std::move(b));
    }
  if (gens.empty()) return {};
  return row_space_basis(Matrix::from_rows(gens, L.dim()));
}

}  // namespace

Classification classify(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Vec> full;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = 1;
    full.push_back(std::move(e));
  }

  Classification c;

  // lower central series: g, [g,g], [g,[g,g]], ...
  std::vector<Vec> lcs = full;
  for (std::size_t step = 0; step <= n; ++step) {
    lcs = bracket_span(L, full, lcs);
    if (lcs.empty()) {
      c.nilpotent = true;
      break;
    }
  }

  // derived series: g, [g,g], [[g,g],[g,g]], ...
  std::vector<Vec> ds = full;
  for (std::size_t step = 0; step <= n; ++step) {
    ds = bracket_span(L, ds, ds);
    if (ds.empty()) {
      c.solvable = true;
      break;
    }
  }
  if (c.nilpotent) c.solvable = true;
  return c;
}

std::string classification_label(const Classification& c) {
  if (c.nilpotent) return "nilpotent";
  if (c.solvable) return "solvable";
  return "non-solvable";
}

LieAlgebra change_basis(const LieAlgebra& L, const Matrix& p) {
  const std::size_t n = L.dim();
  if (p.rows() != n || p.cols() != n) throw Error("change_basis: matrix shape mismatch");
  const Matrix pinv = inverse(p);
  LieAlgebra::BracketMap bm;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec b = L.bracket(p.col(i), p.col(j));
      if (is_zero_vec(b)) continue;
      Vec coeffs = pinv * b;
      bm[{i, j}] = std::move(coeffs);
    }
  return LieAlgebra(n, std::move(bm));
}

}  // namespace twistcoh

#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "twistcoh/rational.hpp"

namespace twistcoh {

using Vec = std::vector<Rational>;

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// Dense row-major rational matrix. Values are exact; dimensions may be zero
// (degree-n and empty cochain spaces produce 0-row / 0-column maps).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      assert(rows[i].size() == cols);
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      assert(cols[j].size() == rows);
      for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const Rational& at(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  Vec row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }
  Vec col(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix operator*(const Matrix& rhs) const {
    assert(cols_ == rhs.rows_);
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& aik = at(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          if (rhs.at(k, j) == 0) continue;
          out.at(i, j) += aik * rhs.at(k, j);
        }
      }
    return out;
  }

  Vec operator*(const Vec& v) const {
    assert(v.size() == cols_);
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != 0 && v[j] != 0) acc += at(i, j) * v[j];
      out[i] = acc;
    }
    return out;
  }

  Matrix operator+(const Matrix& rhs) const {
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
  }

  Matrix operator-(const Matrix& rhs) const {
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
  }

  Matrix scaled(const Rational& c) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * c;
    return out;
  }

  // this + c * Id, used for the (adX* + λ Id) pencils.
  Matrix plus_scaled_identity(const Rational& c) const {
    assert(rows_ == cols_);
    Matrix out = *this;
    for (std::size_t i = 0; i < rows_; ++i) out.at(i, i) += c;
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace twistcoh

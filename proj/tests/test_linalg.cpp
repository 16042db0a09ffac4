#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "twistcoh/charpoly.hpp"
#include "twistcoh/linalg.hpp"

using namespace twistcoh;

namespace {

Matrix mk(const std::vector<std::vector<long>>& rows, std::size_t cols_if_empty = 0) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : cols_if_empty;
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(rows[i][j]);
  return m;
}

Vec vec(const std::vector<long>& xs) {
  Vec v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

// Oracle determinant: Laplace expansion along the first row, no elimination
// shared with the code under test.
Rational laplace_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m.at(0, 0);
  Rational acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    Matrix sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) sub.at(r - 1, cc++) = m.at(r, c);
    }
    const Rational term = m.at(0, j) * laplace_det(sub);
    acc += (j % 2 == 0) ? term : Rational(-term);
  }
  return acc;
}

// Oracle rank: largest k with some nonzero k×k minor, every subset tried.
std::size_t minor_rank(const Matrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::size_t best = 0;
  for (unsigned rm = 0; rm < (1u << r); ++rm) {
    const auto k = static_cast<std::size_t>(__builtin_popcount(rm));
    if (k <= best || k > c) continue;
    bool found = false;
    for (unsigned cm = 0; cm < (1u << c) && !found; ++cm) {
      if (static_cast<std::size_t>(__builtin_popcount(cm)) != k) continue;
      Matrix sub(k, k);
      std::size_t ri = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if (!(rm >> i & 1u)) continue;
        std::size_t ci = 0;
        for (std::size_t j = 0; j < c; ++j)
          if (cm >> j & 1u) sub.at(ri, ci++) = m.at(i, j);
        ++ri;
      }
      found = laplace_det(sub) != 0;
    }
    if (found) best = k;
  }
  return best;
}

Matrix random_matrix(std::mt19937& rng, std::size_t max_side) {
  std::uniform_int_distribution<std::size_t> side(1, max_side);
  std::uniform_int_distribution<long> entry(-9, 9);
  Matrix m(side(rng), side(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = Rational(entry(rng));
  return m;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST_CASE("rank on pinned cases") {
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix(2, 3)) == 0);
  CHECK(rank(mk({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(Matrix(0, 5)) == 0);
}

TEST_CASE("kernel basis convention") {
  CHECK(kernel_basis(Matrix::identity(4)).empty());

  auto z = kernel_basis(Matrix(2, 2));
  REQUIRE(z.size() == 2);
  CHECK(z[0] == vec({1, 0}));
  CHECK(z[1] == vec({0, 1}));

  auto k = kernel_basis(mk({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == vec({1, -1}));  // first nonzero entry normalized to 1
}

TEST_CASE("solve: particular solution with free variables at zero") {
  auto s = solve(Matrix::identity(3), vec({3, -1, 7}));
  REQUIRE(s.has_value());
  CHECK(*s == vec({3, -1, 7}));

  s = solve(mk({{1, 1}}), vec({2}));
  REQUIRE(s.has_value());
  CHECK(*s == vec({2, 0}));

  CHECK_FALSE(solve(mk({{1}, {1}}), vec({1, 2})).has_value());
}

TEST_CASE("rank plus kernel count equals column count") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m = random_matrix(rng, 6);
    auto kb = kernel_basis(m);
    CHECK(rank(m) + kb.size() == m.cols());
    for (const auto& v : kb) CHECK(is_zero_vec(m * v));
  }
}

TEST_CASE("solve result satisfies the system exactly") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> entry(-9, 9);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = random_matrix(rng, 5);
    Vec x(m.cols());
    for (auto& c : x) c = Rational(entry(rng));
    Vec b = m * x;  // consistent by construction
    auto s = solve(m, b);
    REQUIRE(s.has_value());
    CHECK(m * *s == b);
  }
}

TEST_CASE("rank agrees with the minor-expansion oracle") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix m = random_matrix(rng, 5);
    CHECK(rank(m) == minor_rank(m));
  }
}

TEST_CASE("determinant and inverse") {
  CHECK(determinant(Matrix(0, 0)) == 1);
  CHECK(determinant(mk({{2, 1}, {1, 1}})) == 1);
  CHECK_THROWS_AS(determinant(Matrix(2, 3)), NonSquare);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    Matrix m = random_matrix(rng, 4);
    if (m.rows() != m.cols()) continue;
    CHECK(determinant(m) == laplace_det(m));
    if (determinant(m) != 0) CHECK(inverse(m) * m == Matrix::identity(m.rows()));
  }
}

TEST_CASE("row space basis and reduce_against") {
  auto rows = row_space_basis(mk({{2, 4, 2}, {1, 2, 1}, {0, 0, 3}}));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == vec({1, 2, 0}));
  CHECK(rows[1] == vec({0, 0, 1}));

  Vec reduced = reduce_against(vec({3, 6, 5}), rows);
  CHECK(is_zero_vec(reduced));
  Vec survives = reduce_against(vec({0, 1, 0}), rows);
  CHECK(survives == vec({0, 1, 0}));
}

TEST_CASE("characteristic polynomial pinned cases") {
  auto id3 = char_poly_rational_roots(Matrix::identity(3));
  REQUIRE(id3.rational_roots.size() == 1);
  CHECK(id3.rational_roots[0].first == 1);
  CHECK(id3.rational_roots[0].second == 3);
  CHECK(poly_degree(id3.residual) == 0);
  CHECK(poly_to_string(id3.residual) == "1");

  auto irr = char_poly_rational_roots(mk({{0, 2}, {1, 0}}));
  CHECK(irr.rational_roots.empty());
  CHECK(poly_to_string(irr.residual) == "x^2 - 2");

  auto hyp = char_poly_rational_roots(mk({{1, 0}, {0, -1}}));
  REQUIRE(hyp.rational_roots.size() == 2);
  CHECK(hyp.rational_roots[0].first == -1);  // ascending order
  CHECK(hyp.rational_roots[1].first == 1);

  CHECK(char_poly(Matrix(0, 0)) == Poly{Rational(1)});
  CHECK_THROWS_AS(char_poly(Matrix(1, 2)), NonSquare);
}

TEST_CASE("factorization reassembles the characteristic polynomial") {
  std::mt19937 rng(512);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_matrix(rng, 4);
    if (m.rows() != m.cols()) continue;
    auto f = char_poly_rational_roots(m);
    Poly product = f.residual;
    for (const auto& [root, mult] : f.rational_roots) {
      CHECK(poly_eval(f.polynomial, root) == 0);
      for (std::size_t i = 0; i < mult; ++i)
        product = poly_mul(product, Poly{Rational(-root), Rational(1)});
    }
    CHECK(product == f.polynomial);
    // residual truly has no rational roots: probe small candidates
    for (long p = -6; p <= 6; ++p)
      if (poly_degree(f.residual) > 0) CHECK(poly_eval(f.residual, Rational(p)) != 0);
  }
}

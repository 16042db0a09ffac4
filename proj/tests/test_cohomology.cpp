#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "twistcoh/cohomology.hpp"
#include "twistcoh/zoo.hpp"

using namespace twistcoh;

namespace {

Vec vec(const std::vector<long>& xs) {
  Vec v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

std::vector<std::size_t> table(const LieAlgebra& L, const Covector& w, const Rational& lam) {
  return betti(L, Twist(L, w, lam)).betti;
}

std::vector<Covector> closed_forms(const LieAlgebra& L) {
  return kernel_basis(Matrix::from_rows(derived_subalgebra(L), L.dim()));
}

using Table = std::vector<std::size_t>;

}  // namespace

TEST_CASE("pinned tables for the hyperbolic 3-dim algebra") {
  auto g = g0().algebra;
  Covector w1 = vec({1, 0, 0});
  CHECK(table(g, w1, 0) == Table{1, 1, 1, 1});
  CHECK(table(g, w1, 1) == Table{0, 1, 1, 0});
  CHECK(table(g, w1, -1) == Table{0, 1, 1, 0});
  CHECK(table(g, w1, 5) == Table{0, 0, 0, 0});
  CHECK(betti(g, Twist(g, w1, 5)).all_zero());
  CHECK_FALSE(betti(g, Twist::untwisted(g)).all_zero());
}

TEST_CASE("pinned tables for tori and heisenberg") {
  auto t3 = torus(3).algebra;
  CHECK(betti(t3, Twist::untwisted(t3)).betti == Table{1, 3, 3, 1});
  CHECK(table(t3, vec({1, 0, 0}), 1) == Table{0, 0, 0, 0});
  CHECK(table(t3, vec({1, 2, 3}), Rational(-1) / 2) == Table{0, 0, 0, 0});

  auto h = heisenberg().algebra;
  CHECK(betti(h, Twist::untwisted(h)).betti == Table{1, 2, 2, 1});
  CHECK(table(h, vec({1, 0, 0}), 1) == Table{0, 0, 0, 0});
  CHECK(table(h, vec({1, -1, 0}), 3) == Table{0, 0, 0, 0});

  auto v4 = v_family(4).algebra;
  CHECK(betti(v4, Twist::untwisted(v4)).betti == Table{1, 2, 2, 2, 1});
}

TEST_CASE("representatives span the reported dimension") {
  auto t2 = torus(2).algebra;
  auto h1 = cohomology_space(t2, Twist::untwisted(t2), 1);
  CHECK(h1.dimension == 2);
  REQUIRE(h1.representatives.size() == 2);
  CHECK(h1.representatives[0] == vec({1, 0}));
  CHECK(h1.representatives[1] == vec({0, 1}));

  auto g = g0().algebra;
  auto gh1 = cohomology_space(g, Twist::untwisted(g), 1);
  CHECK(gh1.dimension == 1);
  REQUIRE(gh1.representatives.size() == 1);
  CHECK(gh1.representatives[0] == vec({1, 0, 0}));

  auto h = heisenberg().algebra;
  auto dead = cohomology_space(h, Twist(h, vec({1, 0, 0}), 1), 0);
  CHECK(dead.dimension == 0);
  CHECK(dead.representatives.empty());
}

TEST_CASE("representatives are cocycles and independent modulo coboundaries") {
  for (const auto& entry : zoo_sample()) {
    const auto& L = entry.algebra;
    const Covector w = closed_forms(L).at(0);
    for (long lam : {0L, 1L, -1L}) {
      Twist t(L, w, Rational(lam));
      BettiTable bt = betti(L, t);
      for (std::size_t q = 0; q <= L.dim(); ++q) {
        auto space = cohomology_space(L, t, q);
        CAPTURE(entry.name);
        CAPTURE(q);
        CHECK(space.dimension == bt.betti[q]);
        CHECK(space.representatives.size() == space.dimension);

        Matrix dq = differential_wedge_form(L, q, t).matrix;
        for (const auto& r : space.representatives) CHECK(is_zero_vec(dq * r));

        // stacking them on top of a row basis of the image must raise the rank
        // by exactly the reported dimension
        std::vector<Vec> stack;
        if (q > 0) {
          Matrix dprev = differential_wedge_form(L, q - 1, t).matrix;
          for (std::size_t c = 0; c < dprev.cols(); ++c) stack.push_back(dprev.col(c));
        }
        const std::size_t image_rank = rank(Matrix::from_rows(stack, binomial(L.dim(), q)));
        for (const auto& r : space.representatives) stack.push_back(r);
        CHECK(rank(Matrix::from_rows(stack, binomial(L.dim(), q))) ==
              image_rank + space.dimension);
      }
    }
  }
}

TEST_CASE("structural facts that hold across the whole sample") {
  for (const auto& entry : zoo_sample()) {
    const auto& L = entry.algebra;
    const std::size_t n = L.dim();
    const Covector w = closed_forms(L).at(0);
    for (long lam : {0L, 1L, -2L}) {
      BettiTable bt = betti(L, Twist(L, w, Rational(lam)));
      CAPTURE(entry.name);
      CHECK(bt.euler == 0);
      CHECK(bt.betti.size() == n + 1);
      CHECK(bt.betti[0] <= 1);
    }
    // untwisted degree 1 counts the independent closed directions
    BettiTable flat = betti(L, Twist::untwisted(L));
    CHECK(flat.betti[0] == 1);
    CHECK(flat.betti[1] == n - derived_subalgebra(L).size());
  }
}

TEST_CASE("scanning a line of twists") {
  auto g = g0().algebra;
  std::vector<Rational> grid;
  for (long v = -2; v <= 2; ++v) grid.push_back(Rational(v));
  auto tables = scan_line(g, vec({1, 0, 0}), grid);
  REQUIRE(tables.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(tables[i].twist.lambda == grid[i]);
  CHECK(tables[0].all_zero());         // λ = -2
  CHECK_FALSE(tables[1].all_zero());   // λ = -1
  CHECK_FALSE(tables[2].all_zero());   // λ = 0
  CHECK_FALSE(tables[3].all_zero());   // λ = 1
  CHECK(tables[4].all_zero());         // λ = 2

  CHECK(scan_line(g, vec({1, 0, 0}), {}).empty());
}

TEST_CASE("pencil summary: torus") {
  auto t2 = torus(2).algebra;
  auto rep = novikov_report(t2, vec({1, 0}), {Rational(0)});
  CHECK(rep.generic_lambda == 1);  // smallest positive integer off the list
  CHECK(rep.generic.all_zero());
  REQUIRE(rep.exceptional.size() == 1);
  CHECK(rep.exceptional[0].twist.lambda == 0);
  CHECK(rep.exceptional[0].betti == Table{1, 2, 1});
  CHECK(rep.morse_lower_bounds == Table{1, 2, 1});
  CHECK_FALSE(rep.note.empty());
}

TEST_CASE("pencil summary: generic value dodges the exceptional covectors") {
  auto g = g0().algebra;
  Covector w1 = vec({1, 0, 0});
  Covector neg = vec({-1, 0, 0});
  auto rep = novikov_report(g, w1, {Rational(-1), Rational(0), Rational(1)}, {w1, neg});
  // 1 is a candidate; -1·2·w1 misses {±w1}; so λ* = 2
  CHECK(rep.generic_lambda == 2);
  CHECK(rep.generic.all_zero());
  REQUIRE(rep.exceptional.size() == 3);
  CHECK(rep.exceptional[0].twist.lambda == -1);
  CHECK(rep.exceptional[1].twist.lambda == 0);
  CHECK(rep.exceptional[2].twist.lambda == 1);
  CHECK(rep.morse_lower_bounds == Table{1, 1, 1, 1});
}

TEST_CASE("pencil summary: trivial candidates are dropped from the exceptional list") {
  auto g = g0().algebra;
  auto rep = novikov_report(g, vec({1, 0, 0}), {Rational(0), Rational(1), Rational(5)});
  REQUIRE(rep.exceptional.size() == 2);
  CHECK(rep.exceptional[0].twist.lambda == 0);
  CHECK(rep.exceptional[1].twist.lambda == 1);

  auto h = heisenberg().algebra;
  auto hrep = novikov_report(h, vec({1, 0, 0}), {Rational(0)});
  CHECK(hrep.generic_lambda == 1);
  CHECK(hrep.generic.all_zero());
  REQUIRE(hrep.exceptional.size() == 1);
  CHECK(hrep.exceptional[0].betti == Table{1, 2, 2, 1});
  CHECK(hrep.morse_lower_bounds == Table{1, 2, 2, 1});
}

#include <benchmark/benchmark.h>

#include <random>

#include "twistcoh/dixmier.hpp"
#include "twistcoh/weights.hpp"
#include "twistcoh/zoo.hpp"

using namespace twistcoh;

namespace {

Covector axis(std::size_t n, std::size_t i) {
  Covector w(n, Rational(0));
  w[i] = 1;
  return w;
}

Matrix random_rational_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-99, 99);
  std::uniform_int_distribution<long> den(1, 9);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rational(num(rng)) / den(rng);
  return m;
}

void BM_BettiUntwisted(benchmark::State& state) {
  auto L = v_family(static_cast<std::size_t>(state.range(0))).algebra;
  Twist t = Twist::untwisted(L);
  for (auto _ : state) benchmark::DoNotOptimize(betti(L, t));
}
BENCHMARK(BM_BettiUntwisted)->Arg(6)->Arg(8);

void BM_BettiTwisted(benchmark::State& state) {
  auto L = v_family(static_cast<std::size_t>(state.range(0))).algebra;
  Twist t(L, axis(L.dim(), 0), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(betti(L, t));
}
BENCHMARK(BM_BettiTwisted)->Arg(6)->Arg(8);

void BM_NontrivialitySet(benchmark::State& state) {
  auto L = diag_example(static_cast<std::size_t>(state.range(0))).algebra;
  Covector w = axis(L.dim(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(nontriviality_set(L, w));
}
BENCHMARK(BM_NontrivialitySet)->Arg(4)->Arg(6);

void BM_AdaptedBasis(benchmark::State& state) {
  auto L = v_family(static_cast<std::size_t>(state.range(0))).algebra;
  for (auto _ : state) benchmark::DoNotOptimize(adapted_basis(L));
}
BENCHMARK(BM_AdaptedBasis)->Arg(6)->Arg(8);

void BM_RationalRank(benchmark::State& state) {
  Matrix m = random_rational_matrix(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RationalRank)->Arg(20)->Arg(40);

void BM_DifferentialAssembly(benchmark::State& state) {
  auto L = v_family(8).algebra;
  Twist t(L, axis(8, 0), Rational(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(differential_wedge_form(L, static_cast<std::size_t>(state.range(0)), t));
}
BENCHMARK(BM_DifferentialAssembly)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();

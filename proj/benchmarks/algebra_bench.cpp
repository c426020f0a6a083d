#include <random>

#include <benchmark/benchmark.h>

#include <qtorus/dynamics.hpp>
#include <qtorus/weyl_algebra.hpp>

namespace {

qtorus::AlgebraElement random_element(std::int64_t terms, std::int64_t bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> idx(-bound, bound);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  qtorus::AlgebraElement a{qtorus::PlanckParameter(16)};
  for (std::int64_t i = 0; i < terms; ++i) a.add_term({idx(rng), idx(rng)}, {coef(rng), coef(rng)});
  return a;
}

void BM_Multiply(benchmark::State& state) {
  const auto a = random_element(state.range(0), 20, 1);
  const auto b = random_element(state.range(0), 20, 2);
  for (auto _ : state) benchmark::DoNotOptimize(qtorus::multiply(a, b));
  state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(BM_Multiply)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_CesaroCat(benchmark::State& state) {
  const auto alpha = qtorus::ToralAutomorphism::cat(2, 1, 1, 1);
  const auto a = qtorus::weyl_monomial({1, 0}, qtorus::PlanckParameter(8));
  for (auto _ : state) benchmark::DoNotOptimize(qtorus::cesaro_average(alpha, a, state.range(0)));
}
BENCHMARK(BM_CesaroCat)->RangeMultiplier(10)->Range(10, 1000);

void BM_ErgodicitySweepKronecker(benchmark::State& state) {
  const auto alpha = qtorus::ToralAutomorphism::kronecker(0.4142135623, 0.0);
  const auto a = random_element(8, 5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(qtorus::ergodicity_sweep(alpha, a, state.range(0)));
}
BENCHMARK(BM_ErgodicitySweepKronecker)->Arg(1000);

}  // namespace

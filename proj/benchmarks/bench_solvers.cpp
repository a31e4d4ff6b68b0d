#include <benchmark/benchmark.h>

#include "elmis/bayes_el.hpp"
#include "elmis/el_core.hpp"
#include "elmis/el_multi.hpp"
#include "elmis/graphs.hpp"
#include "elmis/maxent.hpp"
#include "elmis/sim.hpp"

using namespace elmis;

namespace {

Sample biased(std::size_t n) {
  auto h = sample_errors({1, n}, ErrorDistribution::standard_gaussian, n);
  for (double& v : h) v += 1.0;
  return Sample(std::move(h));
}

void BM_ElSolve(benchmark::State& state) {
  const auto s = biased(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve(s).lambda_hat);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ElSolve)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity();

void BM_Maxent(benchmark::State& state) {
  const auto s = biased(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_maxent(s, 0.0).kappa);
}
BENCHMARK(BM_Maxent)->RangeMultiplier(10)->Range(1000, 100000);

void BM_Multi(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto xy = sample_bivariate_normal({1, 0}, 0.5, n);
  for (std::size_t i = 0; i < n; ++i) {
    xy[2 * i] += 0.5;
    xy[2 * i + 1] -= 0.1;
  }
  const VectorSample s(xy, 2);
  for (auto _ : state) benchmark::DoNotOptimize(solve_multi(s).max_weight);
}
BENCHMARK(BM_Multi)->RangeMultiplier(10)->Range(100, 100000);

void BM_Enumerate(benchmark::State& state) {
  const int vertices = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(vertices).size());
}
BENCHMARK(BM_Enumerate)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_Posterior(benchmark::State& state) {
  const auto x = sample_errors({2, 0}, ErrorDistribution::standard_gaussian,
                               static_cast<std::size_t>(state.range(0)));
  PosteriorOptions opts;
  for (auto _ : state) {
    const auto g = posterior(x, [](double v, double t) { return v - t; },
                             [](double) { return 1.0; }, opts);
    benchmark::DoNotOptimize(g.mean());
  }
}
BENCHMARK(BM_Posterior)->RangeMultiplier(10)->Range(100, 10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

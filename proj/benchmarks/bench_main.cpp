#include <benchmark/benchmark.h>

#include <vector>

#include "qdeform/canonical.hpp"
#include "qdeform/combinatorics.hpp"
#include "qdeform/dynamics.hpp"
#include "qdeform/qalgebra.hpp"
#include "qdeform/qgaussian.hpp"
#include "qdeform/random.hpp"

namespace {

using namespace qdeform;

void BM_QExp(benchmark::State& state) {
  const EntropicIndex q(1.3);
  double x = -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_exp(q, x));
    x += 1e-9;
  }
}
BENCHMARK(BM_QExp);

void BM_QLog(benchmark::State& state) {
  const EntropicIndex q(1.7);
  double y = 3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_log(q, y));
    y += 1e-9;
  }
}
BENCHMARK(BM_QLog);

void BM_QProduct(benchmark::State& state) {
  const EntropicIndex q(0.6);
  for (auto _ : state) benchmark::DoNotOptimize(q_product(q, 2.5, 3.5));
}
BENCHMARK(BM_QProduct);

void BM_Rk4(benchmark::State& state) {
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate_ode(EntropicIndex(1.3), InitialCondition(0.0, 1.0), Direction::decay, 5.0, step));
  }
}
BENCHMARK(BM_Rk4)->Arg(100)->Arg(1000);

void BM_LogFactorial(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_log_factorial(EntropicIndex(1.5), n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LogFactorial)->Range(10, 100000)->Complexity(benchmark::oN);

void BM_Normalization(benchmark::State& state) {
  const double q = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(normalization(EntropicIndex(q), 1.0));
}
BENCHMARK(BM_Normalization)->Arg(5)->Arg(10)->Arg(15)->Arg(25)->Arg(29);

void BM_Uniqueness(benchmark::State& state) {
  std::vector<double> xs(10);
  Rng seed_rng(42);
  for (double& x : xs) x = seed_rng.uniform(0.0, 5.0);
  for (auto _ : state) {
    Rng rng(42);
    benchmark::DoNotOptimize(verify_uniqueness(EntropicIndex(1.5), xs, 1.0, 100, rng));
  }
}
BENCHMARK(BM_Uniqueness);

}  // namespace

BENCHMARK_MAIN();

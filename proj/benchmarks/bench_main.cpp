#include <benchmark/benchmark.h>

#include "liargame/bounds.hpp"
#include "liargame/solver.hpp"
#include "liargame/weights.hpp"

namespace {

using namespace liargame;

void BM_EnumerateQueries(benchmark::State& state) {
  const GameState s = make_state({10, 44});
  const Params params{1, 16};
  for (auto _ : state) {
    auto menu = enumerate_queries(s, params);
    benchmark::DoNotOptimize(menu);
  }
}
BENCHMARK(BM_EnumerateQueries);

void BM_WeightBound(benchmark::State& state) {
  const auto n = std::int64_t(state.range(0));
  const int lies = int(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(weight_bound(n, lies));
}
BENCHMARK(BM_WeightBound)->Args({1 << 20, 2})->Args({1 << 30, 4});

void BM_SolveColdCounterexample(benchmark::State& state) {
  for (auto _ : state) {
    Solver solver;
    benchmark::DoNotOptimize(solver.value(make_state({10, 44}), Params{1, 16}));
  }
}
BENCHMARK(BM_SolveColdCounterexample)->Unit(benchmark::kMillisecond);

void BM_SolveColdFreshGame(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    Solver solver;
    benchmark::DoNotOptimize(solver.value(start_state(1, n), Params{1, 16}));
  }
}
BENCHMARK(BM_SolveColdFreshGame)->Arg(56)->Unit(benchmark::kMillisecond);

void BM_SolveBasicTwoLies(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    Solver solver;
    benchmark::DoNotOptimize(solver.value_basic(start_state(2, n), 2));
  }
}
BENCHMARK(BM_SolveBasicTwoLies)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_WarmSolve(benchmark::State& state) {
  Solver solver;
  const Params params{1, 16};
  solver.value(make_state({10, 44}), params);
  for (auto _ : state)
    benchmark::DoNotOptimize(solver.value(make_state({10, 44}), params));
}
BENCHMARK(BM_WarmSolve);

void BM_BruteForceOracle(benchmark::State& state) {
  const GameState s = make_state({2, 2, 2});
  const Params params{2, 3};
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_oracle(s, params));
}
BENCHMARK(BM_BruteForceOracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "lrdraw/lr_opt.hpp"
#include "lrdraw/worst_case.hpp"

using namespace lrdraw;

static void BM_RepSequence(benchmark::State& state) {
  Tree t = random_tree(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rep_sequence(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RepSequence)->RangeMultiplier(4)->Range(1 << 8, 1 << 18)->Complexity();

static void BM_OptimalDrawing(benchmark::State& state) {
  Tree t = random_tree(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_lr_drawing(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OptimalDrawing)->RangeMultiplier(4)->Range(1 << 8, 1 << 18)->Complexity();

static void BM_BruteForce(benchmark::State& state) {
  Tree t = random_tree(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_min_width(t));
}
BENCHMARK(BM_BruteForce)->DenseRange(8, 14, 2);

static void BM_FrontierTo(benchmark::State& state) {
  for (auto _ : state) {
    Frontier f;
    f.extend_to(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(f.size());
  }
}
BENCHMARK(BM_FrontierTo)->Arg(31)->Arg(47)->Arg(63)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

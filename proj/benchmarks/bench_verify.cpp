#include <benchmark/benchmark.h>

#include "lrdraw/outerplanar.hpp"
#include "lrdraw/star_strong.hpp"
#include "lrdraw/verify.hpp"

using namespace lrdraw;

static void BM_StarShaped(benchmark::State& state) {
  Tree t = random_tree(static_cast<int>(state.range(0)), 1);
  GridDrawing d = strong_flat(t);
  for (auto _ : state) benchmark::DoNotOptimize(is_star_shaped(t, d).pass());
}
BENCHMARK(BM_StarShaped)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Unit(benchmark::kMillisecond);

static void BM_StarShapedExhaustive(benchmark::State& state) {
  Tree t = random_tree(static_cast<int>(state.range(0)), 1);
  GridDrawing d = strong_flat(t);
  for (auto _ : state) benchmark::DoNotOptimize(is_star_shaped(t, d, {.exhaustive = true}).pass());
}
BENCHMARK(BM_StarShapedExhaustive)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_Outerplanar(benchmark::State& state) {
  auto g = random_maximal_outerplanar(static_cast<int>(state.range(0)), 1);
  DualMapping dm = dual_tree(g);
  GridDrawing d = assemble_outerplanar_drawing(dm, strong_flat(dm.tree));
  for (auto _ : state) benchmark::DoNotOptimize(is_outerplanar_drawing(g, d).pass());
}
BENCHMARK(BM_Outerplanar)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Unit(benchmark::kMillisecond);

static void BM_OuterplanarRaySweep(benchmark::State& state) {
  auto g = random_maximal_outerplanar(static_cast<int>(state.range(0)), 1);
  DualMapping dm = dual_tree(g);
  GridDrawing d = assemble_outerplanar_drawing(dm, strong_flat(dm.tree));
  for (auto _ : state) benchmark::DoNotOptimize(is_outerplanar_drawing(g, d, {.exhaustive = true}).pass());
}
BENCHMARK(BM_OuterplanarRaySweep)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

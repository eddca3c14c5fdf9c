#include <benchmark/benchmark.h>

#include "lrdraw/outerplanar.hpp"
#include "lrdraw/star_strong.hpp"
#include "lrdraw/star_weak.hpp"
#include "lrdraw/worst_case.hpp"

using namespace lrdraw;

static void BM_WeakFlat(benchmark::State& state) {
  Tree t = random_tree(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(flat_drawing(t));
}
BENCHMARK(BM_WeakFlat)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Unit(benchmark::kMicrosecond);

static void BM_StrongFlat(benchmark::State& state) {
  Tree t = random_tree(static_cast<int>(state.range(0)), 1);
  std::int64_t w = 0;
  for (auto _ : state) w = strong_flat(t).width();
  state.counters["width"] = static_cast<double>(w);
}
BENCHMARK(BM_StrongFlat)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Unit(benchmark::kMicrosecond);

static void BM_StrongFlatAdversarial(benchmark::State& state) {
  Tree t = embedded_lower_bound_tree(static_cast<int>(state.range(0)), 1);
  std::int64_t w = 0;
  for (auto _ : state) w = strong_flat(t).width();
  state.counters["width"] = static_cast<double>(w);
}
BENCHMARK(BM_StrongFlatAdversarial)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMicrosecond);

static void BM_StrongBell(benchmark::State& state) {
  Tree t = random_tree(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(strong_bell(t));
}
BENCHMARK(BM_StrongBell)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Unit(benchmark::kMicrosecond);

static void BM_OuterplanarPipeline(benchmark::State& state) {
  auto g = random_maximal_outerplanar(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    DualMapping dm = dual_tree(g);
    benchmark::DoNotOptimize(assemble_outerplanar_drawing(dm, strong_flat(dm.tree)));
  }
}
BENCHMARK(BM_OuterplanarPipeline)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "kunzcount/semigroup.hpp"
#include "kunzcount/tree.hpp"

namespace {

void BM_LevelUnrestricted(benchmark::State& state) {
  const kunzcount::Int g = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kunzcount::level(g));
  }
}
BENCHMARK(BM_LevelUnrestricted)->Arg(8)->Arg(10)->Arg(12);

void BM_LevelMult3(benchmark::State& state) {
  const kunzcount::Int g = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kunzcount::level(g, 3));
  }
}
BENCHMARK(BM_LevelMult3)->Arg(20)->Arg(40);

void BM_LevelMult5(benchmark::State& state) {
  const kunzcount::Int g = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kunzcount::level(g, 5));
  }
}
BENCHMARK(BM_LevelMult5)->Arg(15)->Arg(20);

void BM_TreeExportDot(benchmark::State& state) {
  const auto root = kunzcount::build_tree(state.range(0), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kunzcount::export_tree(root, kunzcount::TreeFormat::dot));
  }
}
BENCHMARK(BM_TreeExportDot)->Arg(15)->Arg(20);

void BM_ChildrenOfMcNugget(benchmark::State& state) {
  const auto s = kunzcount::NumericalSemigroup::from_generators({6, 9, 20});
  for (auto _ : state) {
    benchmark::DoNotOptimize(kunzcount::children(s));
  }
}
BENCHMARK(BM_ChildrenOfMcNugget);

}  // namespace

#include <benchmark/benchmark.h>

#include "kunzcount/counting.hpp"
#include "kunzcount/kunz.hpp"
#include "kunzcount/serialize.hpp"

namespace {

void BM_EnumerationMult4(benchmark::State& state) {
  const kunzcount::Int g = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kunzcount::count_kunz(4, g));
  }
}
BENCHMARK(BM_EnumerationMult4)->Arg(60)->Arg(204)->Arg(300);

void BM_EnumerationMult5(benchmark::State& state) {
  const kunzcount::Int g = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kunzcount::count_kunz(5, g));
  }
}
BENCHMARK(BM_EnumerationMult5)->Arg(40)->Arg(80)->Arg(120);

void BM_EnumerationThreads(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kunzcount::count_kunz(5, 90, threads));
  }
}
BENCHMARK(BM_EnumerationThreads)->Arg(1)->Arg(2)->Arg(4);

void BM_ClosedFormMult4(benchmark::State& state) {
  const kunzcount::Int g = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kunzcount::count_mult4_closed(g));
  }
}
BENCHMARK(BM_ClosedFormMult4)->Arg(204)->Arg(1000000);

void BM_ResidueSplit(benchmark::State& state) {
  for (auto _ : state) {
    kunzcount::Int total = 0;
    for (kunzcount::Int r = 1; r <= 3; ++r) {
      total += kunzcount::count_mult4_residue(204, r);
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ResidueSplit);

void BM_PartitionEnumerated(benchmark::State& state) {
  const kunzcount::Int n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kunzcount::partition_count_enumerated(n));
  }
}
BENCHMARK(BM_PartitionEnumerated)->Arg(210)->Arg(2000);

void BM_PartitionClosed(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(kunzcount::partition_count_closed(210));
  }
}
BENCHMARK(BM_PartitionClosed);

void BM_VerbatimMatrix(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(kunzcount::gap_style(kunzcount::kunz_polytope_verbatim(4)));
  }
}
BENCHMARK(BM_VerbatimMatrix);

}  // namespace

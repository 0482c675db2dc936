#include <benchmark/benchmark.h>

#include "cyclestab/decide.hpp"
#include "cyclestab/families.hpp"
#include "cyclestab/graphs.hpp"
#include "cyclestab/harness.hpp"
#include "cyclestab/longcycle.hpp"
#include "cyclestab/oracle.hpp"

namespace {

using namespace cyclestab;

void BM_DecideFastH(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const Graph g = build_family(HFamily{n, 12, 5}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(decide_fast(g, 5));
  state.SetComplexityN(n);
}
BENCHMARK(BM_DecideFastH)->RangeMultiplier(2)->Range(1 << 14, 1 << 20)->Complexity(benchmark::oN)
    ->Unit(benchmark::kMillisecond);

void BM_DecideExactRandom(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const Graph g = harness::random_graph_under_preconditions(n, 5, 3);
  DecideOptions o;
  o.want_witness = false;
  for (auto _ : state) benchmark::DoNotOptimize(decide_exact(g, 5, o));
}
BENCHMARK(BM_DecideExactRandom)->Arg(16)->Arg(30)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_OracleCircumference(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const Graph g = harness::random_graph_under_preconditions(n, 3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::circumference(g));
}
BENCHMARK(BM_OracleCircumference)->DenseRange(10, 18, 4)->Unit(benchmark::kMicrosecond);

void BM_FindLongCycle(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const Graph g = harness::random_graph_under_preconditions(n, 4, 9);
  for (auto _ : state) benchmark::DoNotOptimize(find_long_cycle(g, 10));
}
BENCHMARK(BM_FindLongCycle)->Arg(12)->Arg(100)->Arg(10000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

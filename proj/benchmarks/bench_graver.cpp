#include <benchmark/benchmark.h>

#include "graver/classify.hpp"
#include "graver/enumerate.hpp"
#include "graver/fixtures.hpp"
#include "graver/oracle.hpp"
#include "graver/verify.hpp"

using namespace graver;

namespace {

Graph cycle_with_chords(int n, const std::vector<Edge>& chords) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({i, i % n + 1});
  edges.insert(edges.end(), chords.begin(), chords.end());
  return Graph(n, edges);
}

void BM_ClassifyAllFixture(benchmark::State& state, const char* name) {
  const Graph g = builtin_fixture(name);
  for (auto _ : state) benchmark::DoNotOptimize(classify_all(g));
}
BENCHMARK_CAPTURE(BM_ClassifyAllFixture, ex416, "ex416")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ClassifyAllFixture, k4, "k4");
BENCHMARK_CAPTURE(BM_ClassifyAllFixture, c10_strong, "c10-strong");

void BM_GraverOracle(benchmark::State& state) {
  const Graph g = builtin_fixture("ex416");
  for (auto _ : state) benchmark::DoNotOptimize(graver_oracle(g));
}
BENCHMARK(BM_GraverOracle)->Unit(benchmark::kMillisecond);

void BM_MinimalGeneration(benchmark::State& state) {
  const Graph g = builtin_fixture("ex416");
  for (auto _ : state) benchmark::DoNotOptimize(minimal_generation(g));
}
BENCHMARK(BM_MinimalGeneration)->Unit(benchmark::kMillisecond);

// long even cycle with a fan of odd chords from vertex 1
void BM_ClassifyWalkCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Edge> chords;
  for (int v = 4; v < n - 1; v += 2) chords.push_back({1, v});
  const Graph g = cycle_with_chords(n, chords);
  std::vector<int> edges;
  for (int i = 0; i < n; ++i) edges.push_back(i);
  const ClosedWalk w = ClosedWalk::from_edges(g, edges);
  for (auto _ : state) benchmark::DoNotOptimize(classify_walk(g, w));
}
BENCHMARK(BM_ClassifyWalkCycle)->RangeMultiplier(2)->Range(8, 64);

void BM_VerifySweep(benchmark::State& state) {
  VerifyOptions opt;
  for (auto _ : state) benchmark::DoNotOptimize(verify_sweep(static_cast<int>(state.range(0)), false, opt));
}
BENCHMARK(BM_VerifySweep)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

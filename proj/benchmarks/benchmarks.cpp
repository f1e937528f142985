#include <benchmark/benchmark.h>

#include <random>
#include <utility>
#include <vector>

#include "gromov/bottleneck.hpp"
#include "gromov/metric.hpp"
#include "gromov/pipeline.hpp"
#include "gromov/treeize.hpp"

namespace {

gromov::CapacityMatrix random_capacities(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> entry(0.0, 100.0);
  gromov::SquareMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      c(i, j) = entry(rng);
      c(j, i) = c(i, j);
    }
  return gromov::CapacityMatrix{std::move(c)};
}

gromov::AdjacencyGraph random_graph(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int t = 0; t < n; ++t) {
    const int u = pick(rng);
    const int v = pick(rng);
    if (u == v) continue;
    bool dup = false;
    for (const auto& [a, b] : edges)
      if ((a == u && b == v) || (a == v && b == u)) dup = true;
    if (!dup) edges.emplace_back(u, v);
  }
  return gromov::make_adjacency_graph(n, edges, n - 1);
}

/// Hop metric of a random connected graph (cheap to build at large n).
gromov::DistanceMatrix random_hop_metric(int n, unsigned seed) {
  const gromov::AdjacencyGraph g = random_graph(n, seed);
  gromov::SquareMatrix d(n);
  for (int s = 0; s < n; ++s) {
    const std::vector<int> row = gromov::bfs_distances(g, s);
    for (int v = 0; v < n; ++v) d(s, v) = row[v];
  }
  return gromov::DistanceMatrix{std::move(d), n - 1, false};
}

void BM_Apbp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const gromov::CapacityMatrix c = random_capacities(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(gromov::apbp(c));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Apbp)->RangeMultiplier(2)->Range(128, 2048)->Complexity();

void BM_MaxminClosureNaive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const gromov::CapacityMatrix c = random_capacities(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(gromov::maxmin_closure_naive(c));
  state.SetComplexityN(n);
}
BENCHMARK(BM_MaxminClosureNaive)->RangeMultiplier(2)->Range(32, 256)->Complexity();

void BM_GtreeMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const gromov::DistanceMatrix d = random_hop_metric(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(gromov::gtree(d));
  state.SetComplexityN(n);
}
BENCHMARK(BM_GtreeMatrix)->RangeMultiplier(2)->Range(128, 2048)->Complexity();

void BM_GtreeFromGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const gromov::AdjacencyGraph g = random_graph(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(gromov::gtree_from_graph(g));
  state.SetComplexityN(n);
}
BENCHMARK(BM_GtreeFromGraph)->RangeMultiplier(2)->Range(128, 4096)->Complexity();

void BM_RealizeTree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const gromov::TreeApproximation t = gromov::gtree(random_hop_metric(n, 5));
  for (auto _ : state) benchmark::DoNotOptimize(gromov::realize_tree(t));
}
BENCHMARK(BM_RealizeTree)->RangeMultiplier(2)->Range(32, 256);

void BM_DeltaHyperbolicity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const gromov::DistanceMatrix d = random_hop_metric(n, 6);
  for (auto _ : state) benchmark::DoNotOptimize(gromov::delta_hyperbolicity(d));
  state.SetComplexityN(n);
}
BENCHMARK(BM_DeltaHyperbolicity)->RangeMultiplier(2)->Range(16, 64)->Complexity();

}  // namespace

BENCHMARK_MAIN();

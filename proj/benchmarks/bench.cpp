#include <benchmark/benchmark.h>

#include <string>
#include <utility>
#include <vector>

#include "steinercut/cuts.hpp"
#include "steinercut/facets.hpp"
#include "steinercut/graph.hpp"
#include "steinercut/laminar.hpp"
#include "steinercut/oracle.hpp"
#include "steinercut/search.hpp"
#include "steinercut/treecactus.hpp"

namespace {

using namespace steinercut;

Graph cycle_graph(int k) {
  std::vector<std::string> nodes;
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    nodes.push_back(std::to_string(i + 1));
    edges.push_back({i, (i + 1) % k});
  }
  return {std::move(nodes), std::move(edges)};
}

// Prism: triangles {v1,v2,v3} and {v4,v5,v6} joined by a perfect matching,
// triangle edges weight one, matching edges weight two, everything terminal.
WeightedSteinerGraph prism_one_two() {
  Graph g({"v1", "v2", "v3", "v4", "v5", "v6"},
          {{"v1", "v2"},
           {"v1", "v3"},
           {"v2", "v3"},
           {"v4", "v5"},
           {"v4", "v6"},
           {"v5", "v6"},
           {"v1", "v4"},
           {"v2", "v5"},
           {"v3", "v6"}});
  EdgeVector w{Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(2), Rat(2), Rat(2)};
  SteinerGraph sg(g, g.all_nodes());
  return {std::move(sg), std::move(w)};
}

WeightedSteinerGraph all_ones_cycle(int k) {
  Graph g = cycle_graph(k);
  SteinerGraph sg(g, g.all_nodes());
  return {std::move(sg), EdgeVector(static_cast<size_t>(k), Rat(1))};
}

void BM_SteinerMinCut(benchmark::State& state) {
  WeightedSteinerGraph wg = prism_one_two();
  for (auto _ : state) {
    benchmark::DoNotOptimize(steiner_min_cut(wg));
  }
}
BENCHMARK(BM_SteinerMinCut);

void BM_GammaEnumerate(benchmark::State& state) {
  WeightedSteinerGraph wg = all_ones_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma(wg, GammaMethod::enumerate));
  }
}
BENCHMARK(BM_GammaEnumerate)->Arg(8)->Arg(12)->Arg(16);

void BM_GammaMaxflow(benchmark::State& state) {
  WeightedSteinerGraph wg = all_ones_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma(wg, GammaMethod::maxflow));
  }
}
BENCHMARK(BM_GammaMaxflow)->Arg(8)->Arg(12)->Arg(16);

void BM_VerifyFacet(benchmark::State& state) {
  WeightedSteinerGraph wg = prism_one_two();
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_facet(wg));
  }
}
BENCHMARK(BM_VerifyFacet);

void BM_LaminarRootBasis(benchmark::State& state) {
  WeightedSteinerGraph wg = prism_one_two();
  for (auto _ : state) {
    benchmark::DoNotOptimize(laminar_root_basis(wg));
  }
}
BENCHMARK(BM_LaminarRootBasis);

void BM_OracleFacets(benchmark::State& state) {
  WeightedSteinerGraph wg = prism_one_two();
  const SteinerGraph& sg = wg.sg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_facets(sg));
  }
}
BENCHMARK(BM_OracleFacets);

void BM_ClassifyFacetsLe5(benchmark::State& state) {
  Graph g({"1", "2", "3", "4", "5"},
          {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "1"}, {"1", "3"}, {"2", "4"}});
  SteinerGraph sg(g, std::vector<std::string>{"1", "2", "4", "5"});
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_facets_le5(sg));
  }
}
BENCHMARK(BM_ClassifyFacetsLe5);

void BM_EnumerateConnectedGraphs(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_connected_graphs(n, n - 1, std::min(9, n * (n - 1) / 2)));
  }
}
BENCHMARK(BM_EnumerateConnectedGraphs)->Arg(5)->Arg(6);

void BM_SearchIrreducible(benchmark::State& state) {
  int tau = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_irreducible(tau, 3 * tau - 6));
  }
}
BENCHMARK(BM_SearchIrreducible)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

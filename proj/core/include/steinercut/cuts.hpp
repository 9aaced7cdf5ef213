#pragma once

#include <optional>
#include <vector>

#include "steinercut/graph.hpp"
#include "steinercut/rational.hpp"

namespace steinercut {

// Steiner graph plus a nonnegative rational weight per edge.
struct WeightedSteinerGraph {
  WeightedSteinerGraph(SteinerGraph graph, EdgeVector weights);

  SteinerGraph sg;
  EdgeVector weights;

  const Graph& graph() const { return sg.graph(); }

  bool operator==(const WeightedSteinerGraph&) const = default;
};

struct EnumGuards {
  int max_nodes = 24;  // hard cap for 2^{|V|-1} cut enumeration
};

// All Steiner cuts, one canonical representative per cut edge-set (t* outside
// the member set), sorted by cutset_less.
std::vector<CutSet> enumerate_steiner_cuts(const SteinerGraph& g,
                                           const EnumGuards& guards = {});

Rat cut_weight(const WeightedSteinerGraph& wg, const CutSet& s);

enum class GammaMethod { enumerate, maxflow };

// gamma_c(G, T): minimum weight of a Steiner cut. The two methods are
// independent routes and must agree exactly.
Rat gamma(const WeightedSteinerGraph& wg, GammaMethod method = GammaMethod::maxflow,
          const EnumGuards& guards = {});

// Canonical cuts of weight exactly gamma (the roots of the inequality
// c x >= gamma), sorted by cutset_less.
std::vector<CutSet> roots(const WeightedSteinerGraph& wg, const EnumGuards& guards = {});

struct MaxFlowResult {
  Rat value;
  CutSet source_side;  // min cut witness: residual-reachable side of s
};

// Exact Edmonds-Karp on the undirected graph; value equals the witness cut's
// capacity by construction.
MaxFlowResult max_flow_min_cut(const Graph& g, const EdgeVector& capacities, int s, int t);

struct MinCutResult {
  Rat value;
  CutSet witness;
};

// Minimum Steiner cut via |T|-1 max-flow calls from t*.
MinCutResult steiner_min_cut(const WeightedSteinerGraph& wg);

}  // namespace steinercut

#include "steinercut/cuts.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <utility>

namespace steinercut {

WeightedSteinerGraph::WeightedSteinerGraph(SteinerGraph graph, EdgeVector w)
    : sg(std::move(graph)), weights(std::move(w)) {
  if (static_cast<int>(weights.size()) != sg.graph().edge_count()) {
    fail(errc::invalid_input, "weights: length does not match edge count");
  }
  for (const Rat& c : weights) {
    if (c < 0) fail(errc::invalid_input, "weights: negative weight");
  }
}

std::vector<CutSet> enumerate_steiner_cuts(const SteinerGraph& g, const EnumGuards& guards) {
  const Graph& graph = g.graph();
  const int n = graph.node_count();
  if (n > guards.max_nodes) {
    fail(errc::guard, "enumerate_steiner_cuts: " + std::to_string(n) +
                          " nodes exceed the enumeration guard of " +
                          std::to_string(guards.max_nodes));
  }
  // The graph is connected, so an edge set delta(S) determines S up to
  // complementation; keeping t* out of S picks one representative per cut.
  // T \ S always holds t*, so S is a Steiner cut iff it meets T.
  const NodeSet rest = graph.all_nodes() & ~(NodeSet{1} << g.base_terminal());
  std::vector<CutSet> cuts;
  for (NodeSet s = rest; s != 0; s = (s - 1) & rest) {
    if ((s & g.terminals()) != 0) cuts.push_back(CutSet{s});
  }
  std::sort(cuts.begin(), cuts.end(),
            [&](const CutSet& a, const CutSet& b) { return cutset_less(graph, a, b); });
  return cuts;
}

Rat cut_weight(const WeightedSteinerGraph& wg, const CutSet& s) {
  Rat total = 0;
  for (int e : delta(wg.graph(), s)) total += wg.weights[e];
  return total;
}

Rat gamma(const WeightedSteinerGraph& wg, GammaMethod method, const EnumGuards& guards) {
  if (method == GammaMethod::maxflow) return steiner_min_cut(wg).value;
  Rat best;
  bool first = true;
  for (const CutSet& s : enumerate_steiner_cuts(wg.sg, guards)) {
    Rat w = cut_weight(wg, s);
    if (first || w < best) {
      best = std::move(w);
      first = false;
    }
  }
  return best;
}

std::vector<CutSet> roots(const WeightedSteinerGraph& wg, const EnumGuards& guards) {
  std::vector<CutSet> cuts = enumerate_steiner_cuts(wg.sg, guards);
  std::vector<Rat> weights;
  weights.reserve(cuts.size());
  for (const CutSet& s : cuts) weights.push_back(cut_weight(wg, s));
  const Rat best = *std::min_element(weights.begin(), weights.end());
  std::vector<CutSet> out;
  for (size_t i = 0; i < cuts.size(); ++i) {
    if (weights[i] == best) out.push_back(cuts[i]);
  }
  return out;  // enumeration order is already cutset_less
}

MaxFlowResult max_flow_min_cut(const Graph& g, const EdgeVector& capacities, int s, int t) {
  const int n = g.node_count();
  const int m = g.edge_count();
  if (s < 0 || s >= n || t < 0 || t >= n) {
    fail(errc::invalid_input, "max_flow_min_cut: node index out of range");
  }
  if (s == t) fail(errc::invalid_input, "max_flow_min_cut: source equals sink");
  if (static_cast<int>(capacities.size()) != m) {
    fail(errc::invalid_input, "max_flow_min_cut: capacity count does not match edge count");
  }
  for (const Rat& c : capacities) {
    if (c < 0) fail(errc::invalid_input, "max_flow_min_cut: negative capacity");
  }

  // Arc 2e runs edge(e).u -> edge(e).v and arc 2e+1 the other way; an
  // undirected edge offers its full capacity in both directions, and the
  // usual antisymmetric flow bookkeeping (arc ^ 1 is the reverse) makes the
  // cut capacity count every crossing edge exactly once.
  std::vector<Rat> flow(static_cast<size_t>(2) * m, Rat(0));
  auto residual = [&](int arc) -> Rat { return capacities[arc / 2] - flow[arc]; };
  auto arc_tail = [&](int arc) {
    const Edge& e = g.edge(arc / 2);
    return arc % 2 == 0 ? e.u : e.v;
  };

  Rat value = 0;
  std::vector<int> parent_arc(n, -1);
  std::vector<char> seen(n, 0);
  while (true) {
    std::fill(seen.begin(), seen.end(), 0);
    std::queue<int> bfs;
    bfs.push(s);
    seen[s] = 1;
    while (!bfs.empty() && !seen[t]) {
      int v = bfs.front();
      bfs.pop();
      for (int e : g.incident_edges(v)) {
        const Edge& ed = g.edge(e);
        int arc = 2 * e + (ed.u == v ? 0 : 1);
        int w = ed.u == v ? ed.v : ed.u;
        if (!seen[w] && residual(arc) > 0) {
          seen[w] = 1;
          parent_arc[w] = arc;
          bfs.push(w);
        }
      }
    }
    if (!seen[t]) break;  // `seen` is now the full residual-reachable set

    Rat push = residual(parent_arc[t]);
    for (int v = t; v != s; v = arc_tail(parent_arc[v])) {
      push = std::min(push, residual(parent_arc[v]));
    }
    for (int v = t; v != s; v = arc_tail(parent_arc[v])) {
      int arc = parent_arc[v];
      flow[arc] += push;
      flow[arc ^ 1] -= push;
    }
    value += push;
  }

  NodeSet side = 0;
  for (int v = 0; v < n; ++v) {
    if (seen[v]) side |= NodeSet{1} << v;
  }
  return {std::move(value), CutSet{side}};
}

MinCutResult steiner_min_cut(const WeightedSteinerGraph& wg) {
  const SteinerGraph& sg = wg.sg;
  const int t_star = sg.base_terminal();
  MinCutResult best;
  bool first = true;
  for (int t : sg.terminal_list()) {
    if (t == t_star) continue;
    MaxFlowResult mf = max_flow_min_cut(sg.graph(), wg.weights, t_star, t);
    if (first || mf.value < best.value) {
      best = {std::move(mf.value), canonical_cut(sg, mf.source_side)};
      first = false;
    }
  }
  return best;
}

}  // namespace steinercut

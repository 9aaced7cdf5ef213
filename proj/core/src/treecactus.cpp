#include "steinercut/treecactus.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "steinercut/error.hpp"

namespace steinercut {

namespace {

int opposite(const Edge& e, int v) { return e.u == v ? e.v : e.u; }

// Biconnected components of the subgraph formed by `ids`, as edge-index
// lists. Hopcroft-Tarjan with an explicit edge stack; isolated host nodes
// contribute nothing.
class BlockFinder {
 public:
  BlockFinder(const Graph& g, const std::vector<int>& ids) : g_(g) {
    adj_.assign(g.node_count(), {});
    for (int e : ids) {
      adj_[g.edge(e).u].push_back(e);
      adj_[g.edge(e).v].push_back(e);
    }
    disc_.assign(g.node_count(), 0);
    low_.assign(g.node_count(), 0);
    for (int e : ids) {
      if (disc_[g.edge(e).u] == 0) dfs(g.edge(e).u, -1);
    }
  }

  std::vector<std::vector<int>>& blocks() { return blocks_; }

 private:
  void dfs(int u, int parent_edge) {
    disc_[u] = low_[u] = ++timer_;
    for (int e : adj_[u]) {
      if (e == parent_edge) continue;
      int w = opposite(g_.edge(e), u);
      if (disc_[w] == 0) {
        stack_.push_back(e);
        dfs(w, e);
        low_[u] = std::min(low_[u], low_[w]);
        if (low_[w] >= disc_[u]) {
          std::vector<int> block;
          int top;
          do {
            top = stack_.back();
            stack_.pop_back();
            block.push_back(top);
          } while (top != e);
          blocks_.push_back(std::move(block));
        }
      } else if (disc_[w] < disc_[u]) {
        stack_.push_back(e);
        low_[u] = std::min(low_[u], disc_[w]);
      }
    }
  }

  const Graph& g_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> disc_, low_;
  std::vector<int> stack_;
  std::vector<std::vector<int>> blocks_;
  int timer_ = 0;
};

NodeSet block_nodes(const Graph& g, const std::vector<int>& block) {
  NodeSet s = 0;
  for (int e : block) {
    s |= NodeSet(1) << g.edge(e).u;
    s |= NodeSet(1) << g.edge(e).v;
  }
  return s;
}

// Nodes lying in two or more blocks, i.e. the cut nodes of each component.
NodeSet articulation_nodes(const Graph& g, const std::vector<std::vector<int>>& blocks) {
  NodeSet seen = 0, twice = 0;
  for (const auto& block : blocks) {
    NodeSet bn = block_nodes(g, block);
    twice |= seen & bn;
    seen |= bn;
  }
  return twice;
}

// Shared per-edge-subset facts, computed without building Graph objects.
struct SubsetScan {
  std::vector<int> ids;
  NodeSet nodes = 0;
  std::vector<int> degree;  // host-indexed
  bool connected = false;   // over the incident nodes

  SubsetScan(const Graph& g, std::uint64_t mask) : degree(g.node_count(), 0) {
    for (int e = 0; e < g.edge_count(); ++e) {
      if ((mask >> e) & 1) {
        ids.push_back(e);
        degree[g.edge(e).u] += 1;
        degree[g.edge(e).v] += 1;
        nodes |= NodeSet(1) << g.edge(e).u;
        nodes |= NodeSet(1) << g.edge(e).v;
      }
    }
    // Union-find over the incident nodes.
    std::vector<int> parent(g.node_count());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int merges = 0;
    for (int e : ids) {
      int a = find(g.edge(e).u), b = find(g.edge(e).v);
      if (a != b) {
        parent[a] = b;
        ++merges;
      }
    }
    connected = merges == set_size(nodes) - 1;
  }

  bool leaves_terminal(NodeSet terminals) const {
    for (int v : set_elements(nodes)) {
      if (degree[v] == 1 && !set_contains(terminals, v)) return false;
    }
    return true;
  }

  bool is_tree() const {
    return connected && static_cast<int>(ids.size()) == set_size(nodes) - 1;
  }
};

// Classifies the subgraph as a cactus with the Steiner cycle condition; fills
// `cycles`/`bridges` (unsorted) when it is one.
bool cactus_blocks(const Graph& g, NodeSet terminals, const SubsetScan& scan,
                   std::vector<std::vector<int>>* cycles, std::vector<int>* bridges) {
  if (!scan.connected) return false;
  BlockFinder finder(g, scan.ids);
  NodeSet marked = articulation_nodes(g, finder.blocks()) | terminals;
  bool saw_cycle = false;
  for (auto& block : finder.blocks()) {
    if (block.size() == 1) {
      if (bridges != nullptr) bridges->push_back(block[0]);
      continue;
    }
    NodeSet bn = block_nodes(g, block);
    if (static_cast<int>(block.size()) != set_size(bn)) return false;  // not a cycle
    if (set_size(bn & marked) < 3) return false;
    saw_cycle = true;
    if (cycles != nullptr) cycles->push_back(std::move(block));
  }
  return saw_cycle;
}

std::uint64_t guard_mask_limit(const Graph& g, const SubgraphGuards& guards) {
  if (g.edge_count() > guards.max_edges) {
    fail(errc::guard, "subgraph enumeration over " + std::to_string(g.edge_count()) +
                                 " edges exceeds the guard of " +
                                 std::to_string(guards.max_edges));
  }
  return std::uint64_t(1) << g.edge_count();
}

enum class SubgraphKind { tree, cactus };

std::vector<std::vector<int>> enumerate_subgraphs(const SteinerGraph& sg,
                                                  const SubgraphGuards& guards,
                                                  SubgraphKind want) {
  const Graph& g = sg.graph();
  const std::uint64_t limit = guard_mask_limit(g, guards);
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    SubsetScan scan(g, mask);
    if (!is_subset(sg.terminals(), scan.nodes)) continue;
    if (!scan.leaves_terminal(sg.terminals())) continue;
    if (want == SubgraphKind::tree) {
      if (scan.is_tree()) out.push_back(scan.ids);
    } else {
      if (!scan.is_tree() && cactus_blocks(g, sg.terminals(), scan, nullptr, nullptr)) {
        out.push_back(scan.ids);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Inequality tree_inequality(const Graph& g, const std::vector<int>& ids) {
  EdgeVector coeffs(static_cast<size_t>(g.edge_count()), Rat(0));
  for (int e : ids) coeffs[e] = 1;
  return Inequality{std::move(coeffs), Rat(1)};
}

Inequality cactus_inequality(const Graph& g, const std::vector<std::vector<int>>& cycles,
                             const std::vector<int>& bridges) {
  EdgeVector coeffs(static_cast<size_t>(g.edge_count()), Rat(0));
  for (const auto& cycle : cycles) {
    for (int e : cycle) coeffs[e] = 1;
  }
  for (int e : bridges) coeffs[e] = 2;
  return Inequality{std::move(coeffs), Rat(2)};
}

void sort_facets(std::vector<FoundFacet>& facets) {
  std::sort(facets.begin(), facets.end(),
            [](const FoundFacet& a, const FoundFacet& b) { return inequality_less(a.ineq, b.ineq); });
}

}  // namespace

TCKind classify_tree_cactus(const SteinerGraph& sg) {
  const Graph& g = sg.graph();
  SubsetScan scan(g, g.edge_count() == 0 ? 0 : (~std::uint64_t(0) >> (64 - g.edge_count())));
  if (!scan.leaves_terminal(sg.terminals())) return TCKind::neither;
  if (scan.is_tree()) return TCKind::steiner_tree;
  if (cactus_blocks(g, sg.terminals(), scan, nullptr, nullptr)) return TCKind::steiner_cactus;
  return TCKind::neither;
}

CactusDecomposition decompose_cactus(const Graph& g) {
  if (!is_connected(g)) {
    fail(errc::invalid_input, "decompose_cactus: graph is disconnected");
  }
  std::vector<int> all(static_cast<size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) all[static_cast<size_t>(e)] = e;
  BlockFinder finder(g, all);
  CactusDecomposition dec;
  for (auto& block : finder.blocks()) {
    if (block.size() == 1) {
      dec.bridges.push_back(block[0]);
      continue;
    }
    NodeSet bn = block_nodes(g, block);
    if (static_cast<int>(block.size()) != set_size(bn)) {
      fail(errc::invalid_input,
                  "decompose_cactus: block with " + std::to_string(block.size()) + " edges on " +
                      std::to_string(set_size(bn)) + " nodes is not a cycle");
    }
    std::sort(block.begin(), block.end());
    dec.cycles.push_back(std::move(block));
  }
  std::sort(dec.bridges.begin(), dec.bridges.end());
  std::sort(dec.cycles.begin(), dec.cycles.end());
  for (const auto& cycle : dec.cycles) {
    int attached = 0;
    for (int v : set_elements(block_nodes(g, cycle))) {
      if (g.degree(v) >= 3) ++attached;
    }
    dec.cycle_degrees.push_back(attached);
  }
  return dec;
}

int defect(const CactusDecomposition& dec, int cycle_index) {
  if (cycle_index < 0 || cycle_index >= static_cast<int>(dec.cycles.size())) {
    fail(errc::invalid_input, "defect: cycle index out of range");
  }
  return std::max(0, 3 - dec.cycle_degrees[static_cast<size_t>(cycle_index)]);
}

Inequality canonical_inequality(const SteinerGraph& sg) {
  switch (classify_tree_cactus(sg)) {
    case TCKind::steiner_tree:
      return Inequality{EdgeVector(static_cast<size_t>(sg.graph().edge_count()), Rat(1)), Rat(1)};
    case TCKind::steiner_cactus: {
      CactusDecomposition dec = decompose_cactus(sg.graph());
      return cactus_inequality(sg.graph(), dec.cycles, dec.bridges);
    }
    case TCKind::neither:
      break;
  }
  fail(errc::invalid_input,
              "canonical_inequality: neither a Steiner tree nor a Steiner cactus");
}

std::vector<std::vector<int>> enumerate_steiner_subtrees(const SteinerGraph& g,
                                                         const SubgraphGuards& guards) {
  return enumerate_subgraphs(g, guards, SubgraphKind::tree);
}

std::vector<std::vector<int>> enumerate_steiner_subcacti(const SteinerGraph& g,
                                                         const SubgraphGuards& guards) {
  return enumerate_subgraphs(g, guards, SubgraphKind::cactus);
}

std::vector<FoundFacet> enumerate_facets_le5(const SteinerGraph& sg,
                                             const SubgraphGuards& guards) {
  if (sg.terminal_count() > 5) {
    fail(errc::invalid_input, "enumerate_facets_le5: more than five terminals");
  }
  const Graph& g = sg.graph();
  const std::uint64_t limit = guard_mask_limit(g, guards);
  std::vector<FoundFacet> out;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    SubsetScan scan(g, mask);
    if (!is_subset(sg.terminals(), scan.nodes)) continue;
    if (!scan.leaves_terminal(sg.terminals())) continue;
    if (scan.is_tree()) {
      out.push_back(FoundFacet{tree_inequality(g, scan.ids), FacetKind::tree});
      continue;
    }
    std::vector<std::vector<int>> cycles;
    std::vector<int> bridges;
    if (cactus_blocks(g, sg.terminals(), scan, &cycles, &bridges)) {
      out.push_back(FoundFacet{cactus_inequality(g, cycles, bridges), FacetKind::cactus});
    }
  }
  sort_facets(out);
  return out;
}

std::vector<FoundFacet> cut_dominant_degree5_facets(const Graph& g,
                                                    const SubgraphGuards& guards) {
  const std::uint64_t limit = guard_mask_limit(g, guards);
  const NodeSet all = g.all_nodes();
  std::vector<FoundFacet> out;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    SubsetScan scan(g, mask);
    if (scan.nodes != all || !scan.connected) continue;
    int leaves = 0;
    for (int v : set_elements(scan.nodes)) {
      if (scan.degree[v] == 1) ++leaves;
    }
    if (scan.is_tree()) {
      if (leaves <= 5) out.push_back(FoundFacet{tree_inequality(g, scan.ids), FacetKind::tree});
      continue;
    }
    // With every node a terminal the Steiner cycle condition is automatic.
    std::vector<std::vector<int>> cycles;
    std::vector<int> bridges;
    if (!cactus_blocks(g, all, scan, &cycles, &bridges)) continue;
    int weight = leaves;
    for (const auto& cycle : cycles) {
      int attached = 0;
      for (int v : set_elements(block_nodes(g, cycle))) {
        if (scan.degree[v] >= 3) ++attached;
      }
      weight += std::max(0, 3 - attached);
    }
    if (weight <= 5) {
      out.push_back(FoundFacet{cactus_inequality(g, cycles, bridges), FacetKind::cactus});
    }
  }
  sort_facets(out);
  return out;
}

}  // namespace steinercut

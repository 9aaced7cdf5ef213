#pragma once

#include <vector>

#include "steinercut/facets.hpp"
#include "steinercut/graph.hpp"

namespace steinercut {

enum class TCKind { steiner_tree, steiner_cactus, neither };

// Steiner tree: a tree whose degree-one nodes are all terminals.
// Steiner cactus: connected, at least one cycle, every edge on at most one
// cycle, degree-one nodes terminal, and every cycle carries at least three
// nodes that are cut nodes or terminals.
TCKind classify_tree_cactus(const SteinerGraph& g);

struct CactusDecomposition {
  std::vector<std::vector<int>> cycles;  // edge indices per cycle block
  std::vector<int> bridges;              // bridge edge indices
  std::vector<int> cycle_degrees;        // nodes of each cycle attached outside it
};

// Requires a cactus (every block an edge or a cycle).
CactusDecomposition decompose_cactus(const Graph& g);

// max(0, 3 - deg(C_i)).
int defect(const CactusDecomposition& dec, int cycle_index);

// Tree: all-ones, rhs 1. Cactus: 1 on cycle edges, 2 on bridges, rhs 2.
// Throws unless classify_tree_cactus(g) says tree or cactus.
Inequality canonical_inequality(const SteinerGraph& g);

struct SubgraphGuards {
  int max_edges = 20;
};

// Edge sets of subgraphs that are Steiner trees / Steiner cacti spanning all
// terminals of g (classification taken on the subgraph itself).
std::vector<std::vector<int>> enumerate_steiner_subtrees(const SteinerGraph& g,
                                                         const SubgraphGuards& guards = {});
std::vector<std::vector<int>> enumerate_steiner_subcacti(const SteinerGraph& g,
                                                         const SubgraphGuards& guards = {});

// Complete facet list of the Steiner cut dominant for |T| <= 5: the canonical
// inequalities of all Steiner subtrees and subcacti, over g's edge space.
std::vector<FoundFacet> enumerate_facets_le5(const SteinerGraph& g,
                                             const SubgraphGuards& guards = {});

// T = V(G) case: spanning trees with at most five leaves plus spanning cacti
// with leaves + total cycle defect at most five.
std::vector<FoundFacet> cut_dominant_degree5_facets(const Graph& g,
                                                    const SubgraphGuards& guards = {});

}  // namespace steinercut

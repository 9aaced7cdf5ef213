#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steinercut/facets.hpp"
#include "steinercut/graph.hpp"

namespace steinercut {

struct CatalogueEntry {
  SteinerGraph graph;  // canonically relabeled
  // all dense (full-support) facet weights with their right-hand sides
  std::vector<Inequality> dense_facets;
};

// Exhaustive catalogue of irreducible Steiner graphs with tau terminals and at
// most max_nodes nodes that carry at least one dense facet. Candidate
// generation prunes by the structural bounds (|E| <= |V| + tau - 3, degree
// lower bounds, 2-connectivity) and dedups up to terminal-preserving
// isomorphism; facet extraction defers entirely to the oracle.
// Requires tau >= 2 and max_nodes <= min(3 tau - 6, 12) for tau >= 3.
std::vector<CatalogueEntry> search_irreducible(int tau, int max_nodes);

// Terminal-preserving graph isomorphism (nodes <= 12 a side).
bool steiner_isomorphic(const SteinerGraph& a, const SteinerGraph& b);

// Node map a -> b when one exists.
std::optional<std::vector<int>> find_steiner_isomorphism(const SteinerGraph& a,
                                                         const SteinerGraph& b);

// Isomorphism that additionally matches edge weights exactly.
bool weighted_steiner_isomorphic(const WeightedSteinerGraph& a, const WeightedSteinerGraph& b);

// All connected simple graphs with n nodes and edge count in
// [min_edges, max_edges], one representative per isomorphism class, nodes
// named "1".."n". Generation order is deterministic.
std::vector<Graph> enumerate_connected_graphs(int n, int min_edges, int max_edges);

}  // namespace steinercut

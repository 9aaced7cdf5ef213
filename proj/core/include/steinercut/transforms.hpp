#pragma once

#include <string>
#include <utility>
#include <vector>

#include "steinercut/cuts.hpp"
#include "steinercut/graph.hpp"

namespace steinercut {

// All five transforms preserve facet-inducing weightings; the tests certify
// outputs independently via verify_facet rather than trusting these claims.

// Replaces edge (u,v) by u-w-v through the new nonterminal w, both halves
// keeping the original weight. The edge slot of (u,v) becomes (u,w) and (w,v)
// is appended, so the inverse reduction restores the exact edge list.
WeightedSteinerGraph subdivide(const WeightedSteinerGraph& wg, int edge_index,
                               const std::string& new_node);

// Inverse of subdivide: removes a degree-two nonterminal whose incident edges
// carry equal weights and whose neighbors are non-adjacent.
WeightedSteinerGraph reduce_degree_two(const WeightedSteinerGraph& wg, const std::string& node);

struct GlueResult {
  WeightedSteinerGraph glued;
  // second graph's node renames applied to avoid clashes (old -> new)
  std::vector<std::pair<std::string, std::string>> renamed;
};

// Identifies terminal node_a of a with terminal node_b of b (the glued node
// keeps node_a's name and is a terminal iff keep_terminal). Weights are the
// joint minimum integer form of (gamma_b * c_a, gamma_a * c_b).
GlueResult glue(const WeightedSteinerGraph& a, const WeightedSteinerGraph& b,
                const std::string& node_a, const std::string& node_b, bool keep_terminal);

// Splits at a cut node w: the part containing the lexicographically smallest
// node of G - w, and the rest; w becomes a terminal of both parts and each
// part's weights are restricted and renormalized.
std::pair<WeightedSteinerGraph, WeightedSteinerGraph> split_at_cut_node(
    const WeightedSteinerGraph& wg, const std::string& node);

// Iterates split_at_cut_node until no part has a cut node.
std::vector<WeightedSteinerGraph> split_components(const WeightedSteinerGraph& wg);

struct YDeltaResult {
  WeightedSteinerGraph raw;         // halved surpluses, possibly fractional
  WeightedSteinerGraph normalized;  // minimum integer form of the same weighting
  Rat gamma_raw;
  Rat gamma_normalized;
};

// Y-triangle reduction at a degree-three nonterminal v of a facet-inducing
// weighting: removes v, adds the opposite edge f_i with weight increased by
// half the surplus zeta_i = c(delta(v)) - 2 c(e_i) whenever zeta_i > 0.
YDeltaResult ydelta(const WeightedSteinerGraph& wg, const std::string& node,
                    const EnumGuards& guards = {});

}  // namespace steinercut

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steinercut/cuts.hpp"
#include "steinercut/facets.hpp"
#include "steinercut/graph.hpp"

namespace steinercut {

// Wire schema:
//   {"nodes": ["s","a","t"],
//    "edges": [["s","a"],["a","t"]],
//    "terminals": ["s","t"],
//    "weights": ["1","2/3"]}            // optional, rational strings
//
// Parse errors carry the offending field name and throw errc::parse.

struct ParsedGraph {
  Graph graph;
  std::vector<std::string> terminals;
  std::optional<EdgeVector> weights;
};

ParsedGraph parse_graph_json(const std::string& text);

// Builds the Steiner graph, enforcing connectivity and |T| >= 2; missing
// weights default to all ones.
WeightedSteinerGraph weighted_graph_from_json(const std::string& text);

std::string graph_to_json(const Graph& g, NodeSet terminals,
                          const EdgeVector* weights = nullptr, int indent = -1);
std::string graph_to_json(const WeightedSteinerGraph& wg, int indent = -1);

// {"coeffs": {"<edge_index>": "p/q", ...}, "rhs": "p/q",
//  "support_size": n, "kind": "tree"|"cactus"|"oracle"}
// Zero coefficients are omitted from "coeffs".
std::string inequality_to_json(const Inequality& ineq, FacetKind kind, int indent = -1);

}  // namespace steinercut

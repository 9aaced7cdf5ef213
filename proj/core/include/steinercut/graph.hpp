#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steinercut/error.hpp"
#include "steinercut/rational.hpp"

namespace steinercut {

// Node subsets are bitmasks over the declared node order. Everything in this
// library runs at enumeration scale, so 63 nodes is plenty of headroom; the
// enumeration guards kick in far below that.
using NodeSet = std::uint64_t;

constexpr int kMaxNodes = 63;

int set_size(NodeSet s);
bool set_contains(NodeSet s, int v);
bool is_subset(NodeSet a, NodeSet b);
std::vector<int> set_elements(NodeSet s);
NodeSet set_of(const std::vector<int>& elements);

// Weight / coefficient vectors indexed parallel to Graph::edges().
using EdgeVector = std::vector<Rat>;

struct Edge {
  int u, v;  // u < v after normalization
  bool operator==(const Edge&) const = default;
};

// Simple undirected graph over named nodes. Node identity is the declared
// order; names are opaque strings used at the serialization boundary.
class Graph {
 public:
  Graph(std::vector<std::string> nodes,
        const std::vector<std::pair<std::string, std::string>>& edges);
  Graph(std::vector<std::string> nodes, std::vector<Edge> edges);

  int node_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& node_names() const { return names_; }
  const std::string& node_name(int v) const { return names_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  int node_index(const std::string& name) const;  // throws on unknown name
  std::optional<int> find_node(const std::string& name) const;
  std::optional<int> find_edge(int u, int v) const;
  bool adjacent(int u, int v) const { return find_edge(u, v).has_value(); }

  int degree(int v) const { return static_cast<int>(incident_[v].size()); }
  const std::vector<int>& incident_edges(int v) const { return incident_[v]; }
  std::vector<int> neighbors(int v) const;

  NodeSet all_nodes() const;

  bool operator==(const Graph&) const = default;

 private:
  void validate_and_index();

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

// A cut is identified by its node side S with {} != S != V(G).
struct CutSet {
  NodeSet members = 0;
  bool operator==(const CutSet&) const = default;
};

class SteinerGraph;

// Edges with exactly one endpoint in s, ascending edge index.
std::vector<int> delta(const Graph& g, const CutSet& s);

// 0/1 vector over the edge set of g.
EdgeVector incidence_vector(const Graph& g, const CutSet& s);

// Components of g after deleting `removed_nodes` and the listed edges.
std::vector<NodeSet> connected_components(const Graph& g,
                                          NodeSet removed_nodes = 0,
                                          const std::vector<int>& removed_edges = {});
bool is_connected(const Graph& g);

CutSet cutset_from_names(const Graph& g, const std::vector<std::string>& names);
// Node names of the cut side, sorted.
std::vector<std::string> cutset_names(const Graph& g, const CutSet& s);

// Connected graph with at least two terminals; the Steiner graph of every
// polyhedral question in the library.
class SteinerGraph {
 public:
  SteinerGraph(Graph g, const std::vector<std::string>& terminals);
  SteinerGraph(Graph g, NodeSet terminals);

  const Graph& graph() const { return graph_; }
  NodeSet terminals() const { return terminals_; }
  bool is_terminal(int v) const { return set_contains(terminals_, v); }
  int terminal_count() const { return set_size(terminals_); }
  std::vector<int> terminal_list() const { return set_elements(terminals_); }
  std::vector<std::string> terminal_names() const;

  // t*: the terminal with the lexicographically smallest name. Canonical cut
  // representatives keep t* outside the cut side.
  int base_terminal() const { return base_terminal_; }

  bool operator==(const SteinerGraph&) const = default;

 private:
  void validate();

  Graph graph_;
  NodeSet terminals_ = 0;
  int base_terminal_ = -1;
};

// S and T both meet the cut side and its complement; throws on invalid S.
bool is_steiner_cut(const SteinerGraph& g, const CutSet& s);

// Complements s if it contains t*.
CutSet canonical_cut(const SteinerGraph& g, CutSet s);

// Deterministic order used everywhere cuts are listed: by size, then by the
// sorted node-name sequence.
bool cutset_less(const Graph& g, const CutSet& a, const CutSet& b);

}  // namespace steinercut

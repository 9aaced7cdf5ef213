#include "steinercut/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace steinercut {

int set_size(NodeSet s) { return std::popcount(s); }
bool set_contains(NodeSet s, int v) { return (s >> v) & 1u; }
bool is_subset(NodeSet a, NodeSet b) { return (a & ~b) == 0; }

std::vector<int> set_elements(NodeSet s) {
  std::vector<int> out;
  for (int v = 0; s != 0; ++v, s >>= 1) {
    if (s & 1u) out.push_back(v);
  }
  return out;
}

NodeSet set_of(const std::vector<int>& elements) {
  NodeSet s = 0;
  for (int v : elements) s |= NodeSet(1) << v;
  return s;
}

Graph::Graph(std::vector<std::string> nodes,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(nodes)) {
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto u = find_node(a), v = find_node(b);
    if (!u || !v) {
      fail(errc::invalid_input, "edges: unknown endpoint \"" + (u ? b : a) + "\"");
    }
    edges_.push_back({std::min(*u, *v), std::max(*u, *v)});
  }
  validate_and_index();
}

Graph::Graph(std::vector<std::string> nodes, std::vector<Edge> edges)
    : names_(std::move(nodes)), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  validate_and_index();
}

void Graph::validate_and_index() {
  if (names_.empty()) fail(errc::invalid_input, "nodes: must be nonempty");
  if (node_count() > kMaxNodes) fail(errc::guard, "nodes: more than 63 nodes unsupported");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (static_cast<int>(seen.size()) != node_count()) {
    fail(errc::invalid_input, "nodes: duplicate node name");
  }
  std::set<std::pair<int, int>> edge_seen;
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= node_count()) fail(errc::invalid_input, "edges: endpoint out of range");
    if (e.u == e.v) fail(errc::invalid_input, "edges: loop at \"" + names_[e.u] + "\"");
    if (!edge_seen.insert({e.u, e.v}).second) {
      fail(errc::invalid_input,
           "edges: parallel edge " + names_[e.u] + "-" + names_[e.v]);
    }
  }
  incident_.assign(node_count(), {});
  for (int i = 0; i < edge_count(); ++i) {
    incident_[edges_[i].u].push_back(i);
    incident_[edges_[i].v].push_back(i);
  }
}

int Graph::node_index(const std::string& name) const {
  if (auto v = find_node(name)) return *v;
  fail(errc::invalid_input, "unknown node \"" + name + "\"");
}

std::optional<int> Graph::find_node(const std::string& name) const {
  for (int v = 0; v < node_count(); ++v) {
    if (names_[v] == name) return v;
  }
  return std::nullopt;
}

std::optional<int> Graph::find_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (int e : incident_[u]) {
    if (edges_[e].u == u && edges_[e].v == v) return e;
  }
  return std::nullopt;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  out.reserve(incident_[v].size());
  for (int e : incident_[v]) out.push_back(edges_[e].u == v ? edges_[e].v : edges_[e].u);
  std::sort(out.begin(), out.end());
  return out;
}

NodeSet Graph::all_nodes() const {
  return node_count() == kMaxNodes + 1 ? ~NodeSet(0) : (NodeSet(1) << node_count()) - 1;
}

namespace {

void check_cutset(const Graph& g, const CutSet& s) {
  if (s.members == 0) fail(errc::invalid_input, "cut set: empty side");
  if (!is_subset(s.members, g.all_nodes())) {
    fail(errc::invalid_input, "cut set: member outside the node set");
  }
  if (s.members == g.all_nodes()) fail(errc::invalid_input, "cut set: full node set");
}

}  // namespace

std::vector<int> delta(const Graph& g, const CutSet& s) {
  check_cutset(g, s);
  std::vector<int> out;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (set_contains(s.members, e.u) != set_contains(s.members, e.v)) out.push_back(i);
  }
  return out;
}

EdgeVector incidence_vector(const Graph& g, const CutSet& s) {
  check_cutset(g, s);
  EdgeVector out(g.edge_count(), Rat(0));
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (set_contains(s.members, e.u) != set_contains(s.members, e.v)) out[i] = 1;
  }
  return out;
}

std::vector<NodeSet> connected_components(const Graph& g, NodeSet removed_nodes,
                                          const std::vector<int>& removed_edges) {
  NodeSet dead_edges = 0;
  for (int e : removed_edges) dead_edges |= NodeSet(1) << e;

  std::vector<NodeSet> comps;
  NodeSet visited = removed_nodes;
  for (int start = 0; start < g.node_count(); ++start) {
    if (set_contains(visited, start)) continue;
    NodeSet comp = 0;
    std::vector<int> stack{start};
    visited |= NodeSet(1) << start;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp |= NodeSet(1) << v;
      for (int e : g.incident_edges(v)) {
        if (set_contains(dead_edges, e)) continue;
        int w = g.edge(e).u == v ? g.edge(e).v : g.edge(e).u;
        if (set_contains(visited, w)) continue;
        visited |= NodeSet(1) << w;
        stack.push_back(w);
      }
    }
    comps.push_back(comp);
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

CutSet cutset_from_names(const Graph& g, const std::vector<std::string>& names) {
  CutSet s;
  for (const std::string& name : names) s.members |= NodeSet(1) << g.node_index(name);
  return s;
}

std::vector<std::string> cutset_names(const Graph& g, const CutSet& s) {
  std::vector<std::string> out;
  for (int v : set_elements(s.members)) out.push_back(g.node_name(v));
  std::sort(out.begin(), out.end());
  return out;
}

SteinerGraph::SteinerGraph(Graph g, const std::vector<std::string>& terminals)
    : graph_(std::move(g)) {
  for (const std::string& name : terminals) {
    terminals_ |= NodeSet(1) << graph_.node_index(name);
  }
  if (static_cast<size_t>(set_size(terminals_)) != terminals.size()) {
    fail(errc::invalid_input, "terminals: duplicate terminal");
  }
  validate();
}

SteinerGraph::SteinerGraph(Graph g, NodeSet terminals)
    : graph_(std::move(g)), terminals_(terminals) {
  validate();
}

void SteinerGraph::validate() {
  if (!is_subset(terminals_, graph_.all_nodes())) {
    fail(errc::invalid_input, "terminals: not a subset of the nodes");
  }
  if (set_size(terminals_) < 2) fail(errc::invalid_input, "terminals: need at least two");
  if (!is_connected(graph_)) fail(errc::invalid_input, "graph must be connected");
  base_terminal_ = -1;
  for (int v : set_elements(terminals_)) {
    if (base_terminal_ < 0 || graph_.node_name(v) < graph_.node_name(base_terminal_)) {
      base_terminal_ = v;
    }
  }
}

std::vector<std::string> SteinerGraph::terminal_names() const {
  std::vector<std::string> out;
  for (int v : terminal_list()) out.push_back(graph_.node_name(v));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_steiner_cut(const SteinerGraph& g, const CutSet& s) {
  check_cutset(g.graph(), s);
  NodeSet t = g.terminals();
  return (s.members & t) != 0 && (t & ~s.members) != 0;
}

CutSet canonical_cut(const SteinerGraph& g, CutSet s) {
  check_cutset(g.graph(), s);
  if (set_contains(s.members, g.base_terminal())) {
    s.members = g.graph().all_nodes() & ~s.members;
  }
  return s;
}

bool cutset_less(const Graph& g, const CutSet& a, const CutSet& b) {
  int sa = set_size(a.members), sb = set_size(b.members);
  if (sa != sb) return sa < sb;
  return cutset_names(g, a) < cutset_names(g, b);
}

}  // namespace steinercut

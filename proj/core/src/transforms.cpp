#include "steinercut/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "steinercut/error.hpp"
#include "steinercut/facets.hpp"
#include "steinercut/linalg.hpp"

namespace steinercut {

namespace {

std::vector<std::pair<std::string, std::string>> edge_pairs(const Graph& g) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(static_cast<size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) {
    out.emplace_back(g.node_name(e.u), g.node_name(e.v));
  }
  return out;
}

int opposite(const Edge& e, int v) { return e.u == v ? e.v : e.u; }

WeightedSteinerGraph rebuild(std::vector<std::string> names,
                             const std::vector<std::pair<std::string, std::string>>& pairs,
                             const std::vector<std::string>& terminals, EdgeVector weights) {
  Graph g(std::move(names), pairs);
  return WeightedSteinerGraph(SteinerGraph(std::move(g), terminals), std::move(weights));
}

}  // namespace

WeightedSteinerGraph subdivide(const WeightedSteinerGraph& wg, int edge_index,
                               const std::string& new_node) {
  const Graph& g = wg.graph();
  if (edge_index < 0 || edge_index >= g.edge_count()) {
    fail(errc::invalid_input,
                "subdivide: edge index " + std::to_string(edge_index) + " out of range");
  }
  if (g.find_node(new_node).has_value()) {
    fail(errc::invalid_input, "subdivide: node '" + new_node + "' already exists");
  }
  const Edge& e = g.edge(edge_index);
  auto pairs = edge_pairs(g);
  pairs[static_cast<size_t>(edge_index)] = {g.node_name(e.u), new_node};
  pairs.emplace_back(new_node, g.node_name(e.v));
  std::vector<std::string> names = g.node_names();
  names.push_back(new_node);
  EdgeVector weights = wg.weights;
  weights.push_back(weights[static_cast<size_t>(edge_index)]);
  return rebuild(std::move(names), pairs, wg.sg.terminal_names(), std::move(weights));
}

WeightedSteinerGraph reduce_degree_two(const WeightedSteinerGraph& wg, const std::string& node) {
  const Graph& g = wg.graph();
  auto vi = g.find_node(node);
  if (!vi.has_value()) {
    fail(errc::invalid_input, "reduce: unknown node '" + node + "'");
  }
  if (wg.sg.is_terminal(*vi)) {
    fail(errc::invalid_input, "reduce: node '" + node + "' is a terminal");
  }
  if (g.degree(*vi) != 2) {
    fail(errc::invalid_input, "reduce: node '" + node + "' has degree " +
                                         std::to_string(g.degree(*vi)) + ", not two");
  }
  const int ei = g.incident_edges(*vi)[0];
  const int ej = g.incident_edges(*vi)[1];
  if (wg.weights[static_cast<size_t>(ei)] != wg.weights[static_cast<size_t>(ej)]) {
    fail(errc::invalid_input,
                "reduce: incident edges of '" + node + "' must carry equal weights");
  }
  const int x = opposite(g.edge(ei), *vi);
  const int y = opposite(g.edge(ej), *vi);
  if (g.adjacent(x, y)) {
    fail(errc::invalid_input, "reduce: neighbors '" + g.node_name(x) + "' and '" +
                                         g.node_name(y) + "' are adjacent");
  }
  auto pairs = edge_pairs(g);
  pairs[static_cast<size_t>(ei)] = {g.node_name(x), g.node_name(y)};
  pairs.erase(pairs.begin() + ej);
  EdgeVector weights = wg.weights;
  weights.erase(weights.begin() + ej);
  std::vector<std::string> names;
  for (int v = 0; v < g.node_count(); ++v) {
    if (v != *vi) names.push_back(g.node_name(v));
  }
  return rebuild(std::move(names), pairs, wg.sg.terminal_names(), std::move(weights));
}

GlueResult glue(const WeightedSteinerGraph& a, const WeightedSteinerGraph& b,
                const std::string& node_a, const std::string& node_b, bool keep_terminal) {
  const Graph& ga = a.graph();
  const Graph& gb = b.graph();
  auto ia = ga.find_node(node_a);
  if (!ia.has_value()) {
    fail(errc::invalid_input, "glue: unknown node '" + node_a + "' in the first graph");
  }
  auto ib = gb.find_node(node_b);
  if (!ib.has_value()) {
    fail(errc::invalid_input, "glue: unknown node '" + node_b + "' in the second graph");
  }
  if (!a.sg.is_terminal(*ia) || !b.sg.is_terminal(*ib)) {
    fail(errc::invalid_input, "glue: both glue nodes must be terminals");
  }
  const Rat gamma_a = gamma(a);
  const Rat gamma_b = gamma(b);
  if (gamma_a <= 0 || gamma_b <= 0) {
    fail(errc::invalid_input, "glue: gamma must be positive on both factors");
  }

  // Rename clashing nodes of b, the glued node aside, by appending primes.
  std::set<std::string> taken(ga.node_names().begin(), ga.node_names().end());
  taken.insert(gb.node_names().begin(), gb.node_names().end());
  std::map<std::string, std::string> bname;
  std::vector<std::pair<std::string, std::string>> renamed;
  bname[node_b] = node_a;
  for (const std::string& n : gb.node_names()) {
    if (n == node_b) continue;
    if (ga.find_node(n).has_value()) {
      std::string fresh = n;
      do {
        fresh += "'";
      } while (taken.count(fresh) > 0);
      taken.insert(fresh);
      renamed.emplace_back(n, fresh);
      bname[n] = fresh;
    } else {
      bname[n] = n;
    }
  }

  std::vector<std::string> names = ga.node_names();
  for (const std::string& n : gb.node_names()) {
    if (n != node_b) names.push_back(bname.at(n));
  }
  auto pairs = edge_pairs(ga);
  for (const Edge& e : gb.edges()) {
    pairs.emplace_back(bname.at(gb.node_name(e.u)), bname.at(gb.node_name(e.v)));
  }
  EdgeVector weights;
  weights.reserve(a.weights.size() + b.weights.size());
  for (const Rat& c : a.weights) weights.push_back(Rat(gamma_b * c));
  for (const Rat& c : b.weights) weights.push_back(Rat(gamma_a * c));
  weights = minimum_integer_form(weights);

  std::vector<std::string> terminals;
  for (const std::string& t : a.sg.terminal_names()) {
    if (t != node_a) terminals.push_back(t);
  }
  for (const std::string& t : b.sg.terminal_names()) {
    if (t != node_b) terminals.push_back(bname.at(t));
  }
  if (keep_terminal) terminals.push_back(node_a);
  return GlueResult{rebuild(std::move(names), pairs, terminals, std::move(weights)),
                    std::move(renamed)};
}

namespace {

WeightedSteinerGraph restrict_to(const WeightedSteinerGraph& wg, NodeSet keep,
                                 const std::string& cut_node) {
  const Graph& g = wg.graph();
  if ((wg.sg.terminals() & keep & ~cutset_from_names(g, {cut_node}).members) == 0) {
    fail(errc::invalid_input,
                "split: the part away from '" + cut_node + "' contains no terminal");
  }
  std::vector<std::string> names;
  std::vector<std::string> terminals{cut_node};
  for (int v : set_elements(keep)) {
    names.push_back(g.node_name(v));
    if (wg.sg.is_terminal(v) && g.node_name(v) != cut_node) {
      terminals.push_back(g.node_name(v));
    }
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  EdgeVector weights;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (set_contains(keep, g.edge(e).u) && set_contains(keep, g.edge(e).v)) {
      pairs.emplace_back(g.node_name(g.edge(e).u), g.node_name(g.edge(e).v));
      weights.push_back(wg.weights[static_cast<size_t>(e)]);
    }
  }
  return rebuild(std::move(names), pairs, terminals, minimum_integer_form(weights));
}

}  // namespace

std::pair<WeightedSteinerGraph, WeightedSteinerGraph> split_at_cut_node(
    const WeightedSteinerGraph& wg, const std::string& node) {
  const Graph& g = wg.graph();
  auto vi = g.find_node(node);
  if (!vi.has_value()) {
    fail(errc::invalid_input, "split: unknown node '" + node + "'");
  }
  const NodeSet removed = NodeSet(1) << *vi;
  std::vector<NodeSet> comps = connected_components(g, removed);
  if (comps.size() < 2) {
    fail(errc::invalid_input, "split: '" + node + "' is not a cut node");
  }
  // The part holding the lexicographically smallest remaining node comes first.
  int smallest = -1;
  for (int v = 0; v < g.node_count(); ++v) {
    if (v == *vi) continue;
    if (smallest == -1 || g.node_name(v) < g.node_name(smallest)) smallest = v;
  }
  NodeSet first = 0;
  for (NodeSet comp : comps) {
    if (set_contains(comp, smallest)) first = comp;
  }
  NodeSet rest = g.all_nodes() & ~first & ~removed;
  return {restrict_to(wg, first | removed, node), restrict_to(wg, rest | removed, node)};
}

namespace {

void split_rec(const WeightedSteinerGraph& wg, std::vector<WeightedSteinerGraph>& out) {
  const Graph& g = wg.graph();
  for (int v = 0; v < g.node_count(); ++v) {
    if (connected_components(g, NodeSet(1) << v).size() > 1) {
      auto parts = split_at_cut_node(wg, g.node_name(v));
      split_rec(parts.first, out);
      split_rec(parts.second, out);
      return;
    }
  }
  out.push_back(wg);
}

}  // namespace

std::vector<WeightedSteinerGraph> split_components(const WeightedSteinerGraph& wg) {
  std::vector<WeightedSteinerGraph> out;
  split_rec(wg, out);
  return out;
}

YDeltaResult ydelta(const WeightedSteinerGraph& wg, const std::string& node,
                    const EnumGuards& guards) {
  const Graph& g = wg.graph();
  auto vi = g.find_node(node);
  if (!vi.has_value()) {
    fail(errc::invalid_input, "ydelta: unknown node '" + node + "'");
  }
  if (wg.sg.is_terminal(*vi)) {
    fail(errc::invalid_input, "ydelta: node '" + node + "' is a terminal");
  }
  if (g.degree(*vi) != 3) {
    fail(errc::invalid_input, "ydelta: node '" + node + "' has degree " +
                                         std::to_string(g.degree(*vi)) + ", not three");
  }
  if (!is_facet_inducing(wg, guards)) {
    fail(errc::invalid_input, "ydelta: the weighting is not facet-inducing");
  }

  // Incident edges keyed by the neighbor, ascending by neighbor index.
  std::vector<std::pair<int, int>> legs;  // (neighbor, edge)
  for (int e : g.incident_edges(*vi)) {
    legs.emplace_back(opposite(g.edge(e), *vi), e);
  }
  std::sort(legs.begin(), legs.end());

  std::vector<std::string> names;
  for (int v = 0; v < g.node_count(); ++v) {
    if (v != *vi) names.push_back(g.node_name(v));
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  EdgeVector weights;
  std::vector<int> slot(static_cast<size_t>(g.edge_count()), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).u == *vi || g.edge(e).v == *vi) continue;
    slot[static_cast<size_t>(e)] = static_cast<int>(pairs.size());
    pairs.emplace_back(g.node_name(g.edge(e).u), g.node_name(g.edge(e).v));
    weights.push_back(wg.weights[static_cast<size_t>(e)]);
  }

  const Rat star = Rat(wg.weights[static_cast<size_t>(legs[0].second)] +
                       wg.weights[static_cast<size_t>(legs[1].second)] +
                       wg.weights[static_cast<size_t>(legs[2].second)]);
  for (int i = 0; i < 3; ++i) {
    const Rat zeta = Rat(star - 2 * wg.weights[static_cast<size_t>(legs[i].second)]);
    if (zeta <= 0) continue;
    const Rat bump = Rat(zeta / 2);
    const int p = legs[(i + 1) % 3].first;
    const int q = legs[(i + 2) % 3].first;
    if (auto f = g.find_edge(p, q); f.has_value()) {
      weights[static_cast<size_t>(slot[static_cast<size_t>(*f)])] += bump;
    } else {
      pairs.emplace_back(g.node_name(std::min(p, q)), g.node_name(std::max(p, q)));
      weights.push_back(bump);
    }
  }

  YDeltaResult res{rebuild(names, pairs, wg.sg.terminal_names(), weights),
                   rebuild(names, pairs, wg.sg.terminal_names(), minimum_integer_form(weights)),
                   Rat(0), Rat(0)};
  res.gamma_raw = gamma(res.raw);
  res.gamma_normalized = gamma(res.normalized);
  return res;
}

}  // namespace steinercut

#include "steinercut/facets.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "steinercut/linalg.hpp"

namespace steinercut {

namespace {

std::string edge_label(const Graph& g, int e) {
  return g.node_name(g.edge(e).u) + "-" + g.node_name(g.edge(e).v);
}

bool in_minimum_integer_form(const EdgeVector& w) {
  Int g = 0;
  for (const Rat& c : w) {
    const Rat value = c;  // materialize any expression before decomposing
    if (denominator(value) != 1) return false;
    g = gcd(g, numerator(value));
  }
  return g == 1;
}

std::string joined_names(const Graph& g, NodeSet s) {
  std::string out;
  for (int v : set_elements(s)) {
    if (!out.empty()) out += ",";
    out += g.node_name(v);
  }
  return out;
}

}  // namespace

int support_size(const Inequality& ineq) {
  int n = 0;
  for (const Rat& c : ineq.coeffs) n += (c != 0);
  return n;
}

Inequality normalized(const Inequality& ineq) {
  auto [coeffs, rhs] = minimum_integer_form(ineq.coeffs, ineq.rhs);
  return {std::move(coeffs), std::move(rhs)};
}

bool inequality_less(const Inequality& a, const Inequality& b) {
  if (a.rhs != b.rhs) return a.rhs < b.rhs;
  return a.coeffs < b.coeffs;
}

std::string to_string(FacetKind kind) {
  switch (kind) {
    case FacetKind::tree: return "tree";
    case FacetKind::cactus: return "cactus";
    case FacetKind::oracle: return "oracle";
  }
  fail(errc::internal, "unknown facet kind");
}

VerifyResult verify_facet(const WeightedSteinerGraph& wg, const EnumGuards& guards) {
  const Graph& g = wg.graph();
  const int m = g.edge_count();
  for (int e = 0; e < m; ++e) {
    if (wg.weights[e] <= 0) {
      fail(errc::invalid_input, "verify_facet: edge " + edge_label(g, e) +
                                    " has weight zero; certify the support restriction instead");
    }
  }
  if (!in_minimum_integer_form(wg.weights)) {
    fail(errc::invalid_input, "verify_facet: weights are not in minimum integer form");
  }

  std::vector<CutSet> cuts = enumerate_steiner_cuts(wg.sg, guards);
  std::vector<Rat> weights;
  weights.reserve(cuts.size());
  for (const CutSet& s : cuts) weights.push_back(cut_weight(wg, s));
  const Rat gamma_value = *std::min_element(weights.begin(), weights.end());
  if (gamma_value < 1) fail(errc::invalid_input, "verify_facet: gamma is below one");

  RowSpan span(m);
  std::vector<CutSet> basis;
  for (size_t i = 0; i < cuts.size() && static_cast<int>(basis.size()) < m; ++i) {
    if (weights[i] != gamma_value) continue;
    if (span.add(incidence_vector(g, cuts[i]))) basis.push_back(cuts[i]);
  }
  if (static_cast<int>(basis.size()) < m) {
    return {std::nullopt,
            "root rank " + std::to_string(basis.size()) + " < " + std::to_string(m),
            gamma_value};
  }
  return {FacetCertificate{gamma_value, std::move(basis)}, "", gamma_value};
}

bool is_facet_inducing(const WeightedSteinerGraph& wg, const EnumGuards& guards) {
  for (const Rat& c : wg.weights) {
    if (c <= 0) return false;
  }
  return verify_facet(WeightedSteinerGraph(wg.sg, minimum_integer_form(wg.weights)), guards)
      .facet();
}

WeightedSteinerGraph support_restriction(const WeightedSteinerGraph& wg) {
  const Graph& g = wg.graph();
  std::vector<int> support;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (wg.weights[e] > 0) support.push_back(e);
  }
  NodeSet kept = 0;
  for (int e : support) {
    kept |= NodeSet{1} << g.edge(e).u;
    kept |= NodeSet{1} << g.edge(e).v;
  }
  for (int t : wg.sg.terminal_list()) {
    if (!set_contains(kept, t)) {
      fail(errc::invalid_input, "support_restriction: terminal " + g.node_name(t) +
                                    " has no positive-weight edge");
    }
  }
  std::vector<std::string> nodes;
  for (int v : set_elements(kept)) nodes.push_back(g.node_name(v));
  std::vector<std::pair<std::string, std::string>> edges;
  EdgeVector weights;
  for (int e : support) {
    edges.emplace_back(g.node_name(g.edge(e).u), g.node_name(g.edge(e).v));
    weights.push_back(wg.weights[e]);
  }
  return WeightedSteinerGraph(SteinerGraph(Graph(std::move(nodes), edges), wg.sg.terminal_names()),
                              std::move(weights));
}

std::vector<StructuralViolation> structural_check(const WeightedSteinerGraph& wg,
                                                  const EnumGuards& guards) {
  std::vector<StructuralViolation> out;
  const Graph& g = wg.graph();

  for (int e = 0; e < g.edge_count(); ++e) {
    if (wg.weights[e] <= 0) {
      out.push_back({StructuralItem::bounded,
                     "edge " + edge_label(g, e) + " has weight " + to_string(wg.weights[e])});
    }
  }

  std::optional<WeightedSteinerGraph> support;
  try {
    support = support_restriction(wg);
  } catch (const error& e) {
    out.push_back({StructuralItem::connected, std::string("support graph: ") + e.what()});
  }

  if (support) {
    const Graph& sg = support->graph();
    const SteinerGraph& ssg = support->sg;

    for (int v = 0; v < g.node_count(); ++v) {
      if (wg.sg.is_terminal(v)) continue;
      std::optional<int> sv = sg.find_node(g.node_name(v));
      int deg = sv ? sg.degree(*sv) : 0;
      if (deg < 2) {
        out.push_back({StructuralItem::nonterminal_degree,
                       "nonterminal " + g.node_name(v) + " has support degree " +
                           std::to_string(deg)});
      }
    }

    const std::vector<CutSet> rootlist = roots(*support, guards);
    const Rat gamma_value = cut_weight(*support, rootlist.front());

    for (const CutSet& r : rootlist) {
      const NodeSet inside = r.members;
      const NodeSet outside = sg.all_nodes() & ~inside;
      if (connected_components(sg, outside).size() > 1 ||
          connected_components(sg, inside).size() > 1) {
        out.push_back({StructuralItem::root_sides_connected,
                       "root {" + joined_names(sg, inside) + "} induces a disconnected side"});
      }
    }

    std::vector<char> covered(sg.edge_count(), 0);
    for (const CutSet& r : rootlist) {
      for (int e : delta(sg, r)) covered[e] = 1;
    }
    for (int e = 0; e < sg.edge_count(); ++e) {
      if (!covered[e]) {
        out.push_back({StructuralItem::edge_in_no_root,
                       "edge " + edge_label(sg, e) + " lies in no minimum Steiner cut"});
      }
    }

    for (int v = 0; v < sg.node_count(); ++v) {
      for (NodeSet comp : connected_components(sg, NodeSet{1} << v)) {
        if ((comp & ssg.terminals()) == 0) {
          out.push_back({StructuralItem::component_without_terminal,
                         "removing " + sg.node_name(v) + " leaves the terminal-free component {" +
                             joined_names(sg, comp) + "}"});
        }
      }
    }

    for (int e = 0; e < sg.edge_count(); ++e) {
      const Rat& w = support->weights[e];
      if (w > gamma_value) {
        out.push_back({StructuralItem::weight_exceeds_gamma,
                       "edge " + edge_label(sg, e) + " has weight " + to_string(w) + " > gamma " +
                           to_string(gamma_value)});
        continue;
      }
      const bool bridge = connected_components(sg, 0, {e}).size() > 1;
      if (w == gamma_value && !bridge) {
        out.push_back({StructuralItem::weight_exceeds_gamma,
                       "edge " + edge_label(sg, e) + " reaches gamma without being a bridge"});
      } else if (bridge && w < gamma_value) {
        out.push_back({StructuralItem::weight_exceeds_gamma,
                       "bridge " + edge_label(sg, e) + " has weight " + to_string(w) +
                           " < gamma " + to_string(gamma_value)});
      }
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const StructuralViolation& a,
                                              const StructuralViolation& b) {
    return static_cast<int>(a.item) < static_cast<int>(b.item);
  });
  return out;
}

bool is_irreducible(const SteinerGraph& g) {
  const Graph& gr = g.graph();
  for (int v = 0; v < gr.node_count(); ++v) {
    if (connected_components(gr, NodeSet{1} << v).size() > 1) return false;
    if (!g.is_terminal(v) && gr.degree(v) == 2) return false;
  }
  return true;
}

namespace {

// Facet test for one terminal set: gamma must hit the right-hand side and the
// minimum cuts must span all support coordinates.
bool certifies(const Graph& g, const Inequality& norm, const std::vector<int>& support_cols,
               NodeSet terminals, int max_nodes_guard) {
  SteinerGraph sg(g, terminals);
  WeightedSteinerGraph wsg(std::move(sg), norm.coeffs);
  EnumGuards guards{max_nodes_guard};

  std::vector<CutSet> cuts = enumerate_steiner_cuts(wsg.sg, guards);
  std::vector<Rat> weights;
  weights.reserve(cuts.size());
  for (const CutSet& s : cuts) weights.push_back(cut_weight(wsg, s));
  if (*std::min_element(weights.begin(), weights.end()) != norm.rhs) return false;

  RowSpan span(static_cast<int>(support_cols.size()));
  int rank = 0;
  for (size_t i = 0; i < cuts.size(); ++i) {
    if (weights[i] != norm.rhs) continue;
    EdgeVector full = incidence_vector(g, cuts[i]);
    RatRow restricted;
    restricted.reserve(support_cols.size());
    for (int c : support_cols) restricted.push_back(full[c]);
    if (span.add(restricted) && ++rank == static_cast<int>(support_cols.size())) return true;
  }
  return false;
}

}  // namespace

SteinerDegreeResult steiner_degree(const Graph& g, const Inequality& ineq, int max_nodes_guard) {
  const int n = g.node_count();
  if (n > max_nodes_guard) {
    fail(errc::guard, "steiner_degree: " + std::to_string(n) + " nodes exceed the guard of " +
                          std::to_string(max_nodes_guard));
  }
  if (static_cast<int>(ineq.coeffs.size()) != g.edge_count()) {
    fail(errc::invalid_input, "steiner_degree: coefficient count does not match edge count");
  }
  for (const Rat& c : ineq.coeffs) {
    if (c < 0) fail(errc::invalid_input, "steiner_degree: negative coefficient");
  }
  if (!is_connected(g)) fail(errc::invalid_input, "steiner_degree: graph is disconnected");
  if (ineq.rhs <= 0) fail(errc::invalid_input, "steiner_degree: right-hand side must be positive");

  const Inequality norm = normalized(ineq);
  std::vector<int> support_cols;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (norm.coeffs[e] > 0) support_cols.push_back(e);
  }

  for (int tau = 2; tau <= n; ++tau) {
    for (NodeSet t = 0; t < (NodeSet{1} << n); ++t) {
      if (set_size(t) != tau) continue;
      if (certifies(g, norm, support_cols, t, max_nodes_guard)) return {tau, t};
    }
  }
  fail(errc::invalid_input, "steiner_degree: not a facet of the cut dominant for any terminal set");
}

}  // namespace steinercut

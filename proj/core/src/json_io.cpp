#include "steinercut/json_io.hpp"

#include <json.hpp>

#include <set>

#include "steinercut/error.hpp"

namespace steinercut {

namespace {

using nlohmann::json;

std::vector<std::string> string_array(const json& j, const std::string& field) {
  if (!j.is_array()) fail(errc::parse, field + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) fail(errc::parse, field + ": expected an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

ParsedGraph parse_graph_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(errc::parse, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(errc::parse, "invalid JSON: expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "nodes" && key != "edges" && key != "terminals" && key != "weights") {
      fail(errc::parse, key + ": unknown field");
    }
  }
  if (!j.contains("nodes")) fail(errc::parse, "nodes: missing field");
  if (!j.contains("edges")) fail(errc::parse, "edges: missing field");
  if (!j.contains("terminals")) fail(errc::parse, "terminals: missing field");

  std::vector<std::string> nodes = string_array(j["nodes"], "nodes");

  if (!j["edges"].is_array()) fail(errc::parse, "edges: expected an array of pairs");
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      fail(errc::parse, "edges: each edge must be a pair of node names");
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }

  std::vector<std::string> terminals = string_array(j["terminals"], "terminals");

  std::optional<EdgeVector> weights;
  if (j.contains("weights")) {
    std::vector<std::string> raw = string_array(j["weights"], "weights");
    if (raw.size() != edges.size()) {
      fail(errc::parse, "weights: length " + std::to_string(raw.size()) +
                            " does not match edge count " + std::to_string(edges.size()));
    }
    EdgeVector w;
    for (const std::string& s : raw) {
      Rat value;
      try {
        value = parse_rational(s);
      } catch (const error&) {
        fail(errc::parse, "weights: malformed rational \"" + s + "\"");
      }
      if (value < 0) fail(errc::parse, "weights: negative weight \"" + s + "\"");
      w.push_back(value);
    }
    weights = std::move(w);
  }

  Graph graph = [&] {
    try {
      return Graph(std::move(nodes), edges);
    } catch (const error& e) {
      fail(errc::parse, e.what());
    }
  }();
  if (terminals.empty()) fail(errc::parse, "terminals: must be nonempty");
  std::set<std::string> names(graph.node_names().begin(), graph.node_names().end());
  std::set<std::string> seen;
  for (const std::string& t : terminals) {
    if (!names.count(t)) fail(errc::parse, "terminals: unknown node \"" + t + "\"");
    if (!seen.insert(t).second) fail(errc::parse, "terminals: duplicate \"" + t + "\"");
  }

  return ParsedGraph{std::move(graph), std::move(terminals), std::move(weights)};
}

WeightedSteinerGraph weighted_graph_from_json(const std::string& text) {
  ParsedGraph p = parse_graph_json(text);
  EdgeVector weights =
      p.weights ? std::move(*p.weights) : EdgeVector(p.graph.edge_count(), Rat(1));
  SteinerGraph sg = [&] {
    try {
      return SteinerGraph(std::move(p.graph), p.terminals);
    } catch (const error& e) {
      fail(errc::parse, e.what());
    }
  }();
  return WeightedSteinerGraph(std::move(sg), std::move(weights));
}

std::string graph_to_json(const Graph& g, NodeSet terminals, const EdgeVector* weights,
                          int indent) {
  json j;
  j["nodes"] = g.node_names();
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({g.node_name(e.u), g.node_name(e.v)});
  }
  j["edges"] = std::move(edges);
  json terms = json::array();
  for (int v : set_elements(terminals)) terms.push_back(g.node_name(v));
  j["terminals"] = std::move(terms);
  if (weights) {
    json w = json::array();
    for (const Rat& value : *weights) w.push_back(to_string(value));
    j["weights"] = std::move(w);
  }
  return j.dump(indent);
}

std::string graph_to_json(const WeightedSteinerGraph& wg, int indent) {
  return graph_to_json(wg.graph(), wg.sg.terminals(), &wg.weights, indent);
}

std::string inequality_to_json(const Inequality& ineq, FacetKind kind, int indent) {
  json coeffs = json::object();
  for (size_t i = 0; i < ineq.coeffs.size(); ++i) {
    if (ineq.coeffs[i] != 0) coeffs[std::to_string(i)] = to_string(ineq.coeffs[i]);
  }
  json j;
  j["coeffs"] = std::move(coeffs);
  j["rhs"] = to_string(ineq.rhs);
  j["support_size"] = support_size(ineq);
  j["kind"] = to_string(kind);
  return j.dump(indent);
}

}  // namespace steinercut

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "steinercut/cuts.hpp"
#include "steinercut/error.hpp"
#include "steinercut/facets.hpp"
#include "steinercut/json_io.hpp"
#include "steinercut/laminar.hpp"
#include "steinercut/linalg.hpp"
#include "steinercut/oracle.hpp"
#include "steinercut/search.hpp"
#include "steinercut/transforms.hpp"
#include "steinercut/treecactus.hpp"

namespace {

using nlohmann::json;
using namespace steinercut;

struct GuardSet {
  EnumGuards enums{};
  OracleGuards oracle{};
  SubgraphGuards subgraph{};
  int degree_nodes = 10;
};

// --max-size only tightens the built-in guards, never widens them.
GuardSet capped_guards(const std::optional<int>& max_size) {
  GuardSet g;
  if (max_size) {
    g.enums.max_nodes = std::min(g.enums.max_nodes, *max_size);
    g.oracle.max_edges = std::min(g.oracle.max_edges, *max_size);
    g.subgraph.max_edges = std::min(g.subgraph.max_edges, *max_size);
    g.degree_nodes = std::min(g.degree_nodes, *max_size);
  }
  return g;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) fail(errc::parse, "input: cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json cut_names_json(const Graph& g, const CutSet& s) {
  json arr = json::array();
  for (const std::string& name : cutset_names(g, s)) arr.push_back(name);
  return arr;
}

json facets_json(const std::vector<FoundFacet>& facets) {
  json arr = json::array();
  for (const FoundFacet& f : facets) arr.push_back(json::parse(inequality_to_json(f.ineq, f.kind)));
  return arr;
}

std::string inequality_text(const Graph& g, const Inequality& ineq) {
  std::string line;
  for (size_t i = 0; i < ineq.coeffs.size(); ++i) {
    if (ineq.coeffs[i] == 0) continue;
    if (!line.empty()) line += " + ";
    if (ineq.coeffs[i] != 1) line += to_string(ineq.coeffs[i]) + " ";
    const Edge& e = g.edge(static_cast<int>(i));
    line += "x(" + g.node_name(e.u) + "," + g.node_name(e.v) + ")";
  }
  return line + " >= " + to_string(ineq.rhs);
}

std::string cut_text(const Graph& g, const CutSet& s) {
  std::string line = "{";
  bool first = true;
  for (const std::string& name : cutset_names(g, s)) {
    if (!first) line += ", ";
    line += name;
    first = false;
  }
  return line + "}";
}

std::string graph_text(const WeightedSteinerGraph& wg) {
  const Graph& g = wg.graph();
  std::string out;
  for (int e = 0; e < g.edge_count(); ++e) {
    out += g.node_name(g.edge(e).u) + " -- " + g.node_name(g.edge(e).v) + " : " +
           to_string(wg.weights[static_cast<size_t>(e)]) + "\n";
  }
  out += "terminals = {";
  bool first = true;
  for (const std::string& name : wg.sg.terminal_names()) {
    if (!first) out += ", ";
    out += name;
    first = false;
  }
  return out + "}\n";
}

struct CommonOpts {
  std::string input = "-";
  std::string format = "json";
  std::optional<int> max_size;

  bool text() const { return format == "text"; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--input", opts.input, "graph JSON file, or - for stdin");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--max-size", opts.max_size,
                  "tighten size guards to at most this value (never widens)")
      ->check(CLI::PositiveNumber);
}

void run_mincut(const CommonOpts& opts) {
  WeightedSteinerGraph wg = weighted_graph_from_json(read_input(opts.input));
  MinCutResult res = steiner_min_cut(wg);
  // The canonical witness keeps the base terminal outside; report the side
  // the flow grew from, which is the more natural reading of a witness.
  CutSet source_side{wg.graph().all_nodes() & ~res.witness.members};
  if (opts.text()) {
    std::cout << "gamma = " << to_string(res.value) << "\n"
              << "witness = " << cut_text(wg.graph(), source_side) << "\n";
    return;
  }
  emit({{"gamma", to_string(res.value)}, {"witness", cut_names_json(wg.graph(), source_side)}});
}

void run_facets(const CommonOpts& opts, const std::string& method, bool degree5) {
  GuardSet guards = capped_guards(opts.max_size);
  WeightedSteinerGraph wg = weighted_graph_from_json(read_input(opts.input));
  std::vector<FoundFacet> facets;
  if (degree5) {
    if (wg.sg.terminal_count() != wg.graph().node_count()) {
      fail(errc::invalid_input, "terminals: --degree5 needs every node to be a terminal");
    }
    facets = cut_dominant_degree5_facets(wg.graph(), guards.subgraph);
  } else if (method == "classify") {
    facets = enumerate_facets_le5(wg.sg, guards.subgraph);
  } else {
    facets = oracle_facets(wg.sg, guards.oracle);
  }
  if (opts.text()) {
    for (const FoundFacet& f : facets) {
      std::cout << inequality_text(wg.graph(), f.ineq) << "  [" << to_string(f.kind) << "]\n";
    }
    return;
  }
  emit(facets_json(facets));
}

void run_verify(const CommonOpts& opts) {
  GuardSet guards = capped_guards(opts.max_size);
  WeightedSteinerGraph wg = weighted_graph_from_json(read_input(opts.input));
  json out;
  try {
    WeightedSteinerGraph restricted = support_restriction(wg);
    restricted.weights = minimum_integer_form(restricted.weights);
    VerifyResult vr = verify_facet(restricted, guards.enums);
    out["facet"] = vr.facet();
    out["gamma"] = to_string(vr.gamma_value);
    if (vr.facet()) {
      json basis = json::array();
      for (const CutSet& s : vr.certificate->root_basis) {
        basis.push_back(cut_names_json(restricted.graph(), s));
      }
      out["root_basis"] = std::move(basis);
    } else {
      out["reason"] = vr.reason;
    }
    if (opts.text()) {
      if (vr.facet()) {
        std::cout << "facet, gamma = " << to_string(vr.gamma_value) << "\n";
        for (const CutSet& s : vr.certificate->root_basis) {
          std::cout << "  root " << cut_text(restricted.graph(), s) << "\n";
        }
      } else {
        std::cout << "not a facet: " << vr.reason << "\n";
      }
      return;
    }
  } catch (const error& e) {
    if (e.kind() != errc::invalid_input) throw;
    if (opts.text()) {
      std::cout << "not a facet: " << e.what() << "\n";
      return;
    }
    out = {{"facet", false}, {"reason", std::string(e.what())}};
  }
  emit(out);
}

struct TransformOpts {
  std::string op;
  int edge = -1;
  std::string node;
  std::string node2;
  std::string other;
  bool keep_terminal = false;
};

void require_flag(bool present, const std::string& flag, const std::string& op) {
  if (!present) fail(errc::invalid_input, "transform: " + flag + " is required for --op " + op);
}

json graph_json(const WeightedSteinerGraph& wg) { return json::parse(graph_to_json(wg)); }

void run_transform(const CommonOpts& opts, const TransformOpts& t) {
  GuardSet guards = capped_guards(opts.max_size);
  WeightedSteinerGraph wg = weighted_graph_from_json(read_input(opts.input));
  if (t.op == "subdivide") {
    require_flag(t.edge >= 0, "--edge", t.op);
    require_flag(!t.node.empty(), "--node", t.op);
    WeightedSteinerGraph out = subdivide(wg, t.edge, t.node);
    if (opts.text()) {
      std::cout << graph_text(out);
    } else {
      emit(graph_json(out));
    }
  } else if (t.op == "reduce") {
    require_flag(!t.node.empty(), "--node", t.op);
    WeightedSteinerGraph out = reduce_degree_two(wg, t.node);
    if (opts.text()) {
      std::cout << graph_text(out);
    } else {
      emit(graph_json(out));
    }
  } else if (t.op == "glue") {
    require_flag(!t.other.empty(), "--other", t.op);
    require_flag(!t.node.empty(), "--node", t.op);
    require_flag(!t.node2.empty(), "--node2", t.op);
    WeightedSteinerGraph other = weighted_graph_from_json(read_input(t.other));
    GlueResult res = glue(wg, other, t.node, t.node2, t.keep_terminal);
    if (opts.text()) {
      std::cout << graph_text(res.glued);
      for (const auto& [before, after] : res.renamed) {
        std::cout << "renamed " << before << " -> " << after << "\n";
      }
      return;
    }
    json renamed = json::array();
    for (const auto& [before, after] : res.renamed) renamed.push_back({before, after});
    emit({{"graph", graph_json(res.glued)}, {"renamed", std::move(renamed)}});
  } else if (t.op == "split") {
    std::vector<WeightedSteinerGraph> parts;
    if (!t.node.empty()) {
      auto [first, second] = split_at_cut_node(wg, t.node);
      parts.push_back(std::move(first));
      parts.push_back(std::move(second));
    } else {
      parts = split_components(wg);
    }
    if (opts.text()) {
      for (size_t i = 0; i < parts.size(); ++i) {
        std::cout << "part " << i + 1 << ":\n" << graph_text(parts[i]);
      }
      return;
    }
    json arr = json::array();
    for (const WeightedSteinerGraph& part : parts) arr.push_back(graph_json(part));
    emit({{"parts", std::move(arr)}});
  } else {  // ydelta
    require_flag(!t.node.empty(), "--node", t.op);
    YDeltaResult res = ydelta(wg, t.node, guards.enums);
    if (opts.text()) {
      std::cout << "gamma raw = " << to_string(res.gamma_raw)
                << ", gamma normalized = " << to_string(res.gamma_normalized) << "\n"
                << graph_text(res.normalized);
      return;
    }
    emit({{"raw", graph_json(res.raw)},
          {"normalized", graph_json(res.normalized)},
          {"gamma_raw", to_string(res.gamma_raw)},
          {"gamma_normalized", to_string(res.gamma_normalized)}});
  }
}

void run_laminar_basis(const CommonOpts& opts) {
  GuardSet guards = capped_guards(opts.max_size);
  WeightedSteinerGraph wg = weighted_graph_from_json(read_input(opts.input));
  LaminarBasis basis = laminar_root_basis(wg, guards.enums);
  if (opts.text()) {
    for (const CutSet& s : basis.members) {
      std::cout << cut_text(wg.graph(), s) << "\n";
    }
    return;
  }
  json arr = json::array();
  for (const CutSet& s : basis.members) arr.push_back(cut_names_json(wg.graph(), s));
  emit(arr);
}

void run_steiner_degree(const CommonOpts& opts, const std::string& rhs_text) {
  GuardSet guards = capped_guards(opts.max_size);
  WeightedSteinerGraph wg = weighted_graph_from_json(read_input(opts.input));
  // Coefficients come from the weights; the rhs defaults to the all-terminal
  // minimum cut value, which is the facet's right-hand side.
  Rat rhs;
  if (rhs_text.empty()) {
    std::vector<std::string> all_names;
    for (int v = 0; v < wg.graph().node_count(); ++v) all_names.push_back(wg.graph().node_name(v));
    rhs = gamma(WeightedSteinerGraph(SteinerGraph(wg.graph(), all_names), wg.weights));
  } else {
    rhs = parse_rational(rhs_text);
  }
  SteinerDegreeResult res =
      steiner_degree(wg.graph(), Inequality{wg.weights, rhs}, guards.degree_nodes);
  if (opts.text()) {
    std::cout << "degree = " << res.degree << "\n"
              << "terminals = " << cut_text(wg.graph(), CutSet{res.terminals}) << "\n";
    return;
  }
  emit({{"degree", res.degree},
        {"terminals", cut_names_json(wg.graph(), CutSet{res.terminals})}});
}

void run_search(const CommonOpts& opts, int terminals, int max_nodes, const std::string& output) {
  std::vector<CatalogueEntry> entries = search_irreducible(terminals, max_nodes);
  json arr = json::array();
  for (const CatalogueEntry& e : entries) {
    json facets = json::array();
    for (const Inequality& ineq : e.dense_facets) {
      facets.push_back(json::parse(inequality_to_json(ineq, FacetKind::oracle)));
    }
    arr.push_back({{"graph", json::parse(graph_to_json(e.graph.graph(), e.graph.terminals()))},
                   {"dense_facets", std::move(facets)}});
  }
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) fail(errc::parse, "output: cannot open \"" + output + "\"");
    out << arr.dump(2) << "\n";
    return;
  }
  if (opts.text()) {
    for (const CatalogueEntry& e : entries) {
      std::cout << e.graph.graph().node_count() << " nodes, " << e.graph.graph().edge_count()
                << " edges, " << e.dense_facets.size() << " dense facet(s):\n";
      for (const Inequality& ineq : e.dense_facets) {
        std::cout << "  " << inequality_text(e.graph.graph(), ineq) << "\n";
      }
    }
    return;
  }
  emit(arr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact facet toolbox for Steiner cut dominants"};
  app.require_subcommand(1);

  CommonOpts mincut_opts;
  CLI::App* mincut = app.add_subcommand("mincut", "minimum Steiner cut value and witness");
  add_common(mincut, mincut_opts);
  mincut->callback([&] { run_mincut(mincut_opts); });

  CommonOpts facets_opts;
  std::string method = "classify";
  bool degree5 = false;
  CLI::App* facets = app.add_subcommand("facets", "facet inequalities of the Steiner cut dominant");
  add_common(facets, facets_opts);
  facets->add_option("--method", method, "classify (trees/cacti) or oracle (blocker vertices)")
      ->check(CLI::IsMember({"classify", "oracle"}));
  facets->add_flag("--degree5", degree5,
                   "all facets of Steiner degree at most five (needs every node terminal)");
  facets->callback([&] { run_facets(facets_opts, method, degree5); });

  CommonOpts verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "certify whether the weighting induces a facet");
  add_common(verify, verify_opts);
  verify->callback([&] { run_verify(verify_opts); });

  CommonOpts transform_opts;
  TransformOpts t;
  CLI::App* transform = app.add_subcommand("transform", "facet-preserving graph transformations");
  add_common(transform, transform_opts);
  transform->add_option("--op", t.op, "transformation to apply")
      ->required()
      ->check(CLI::IsMember({"subdivide", "reduce", "glue", "split", "ydelta"}));
  transform->add_option("--edge", t.edge, "edge index (subdivide)");
  transform->add_option("--node", t.node, "node name (op dependent)");
  transform->add_option("--node2", t.node2, "glue node in the second graph");
  transform->add_option("--other", t.other, "second graph JSON file (glue)");
  transform->add_flag("--keep-terminal", t.keep_terminal, "keep the glue node terminal");
  transform->callback([&] { run_transform(transform_opts, t); });

  CommonOpts laminar_opts;
  CLI::App* laminar = app.add_subcommand("laminar-basis", "laminar family of independent roots");
  add_common(laminar, laminar_opts);
  laminar->callback([&] { run_laminar_basis(laminar_opts); });

  CommonOpts degree_opts;
  std::string rhs_text;
  CLI::App* degree = app.add_subcommand("steiner-degree",
                                        "smallest terminal count for which the weights give a facet");
  add_common(degree, degree_opts);
  degree->add_option("--rhs", rhs_text, "right-hand side (default: all-terminal minimum cut)");
  degree->callback([&] { run_steiner_degree(degree_opts, rhs_text); });

  CommonOpts search_opts;
  int terminals = 0;
  int max_nodes = 0;
  std::string output;
  CLI::App* search = app.add_subcommand("search-irreducible",
                                        "catalogue of irreducible facet-inducing Steiner graphs");
  search->add_option("--terminals", terminals, "terminal count")->required();
  search->add_option("--max-nodes", max_nodes, "largest node count to scan")->required();
  search->add_option("--output", output, "write the JSON catalogue to this file");
  search->add_option("--format", search_opts.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  search->callback([&] { run_search(search_opts, terminals, max_nodes, output); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    switch (e.kind()) {
      case errc::parse:
      case errc::invalid_input:
        return 2;
      case errc::guard:
        return 3;
      case errc::internal:
        return 4;
    }
    return 4;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 4;
  }
  return 0;
}

#include <doctest.h>

#include <algorithm>

#include "steinercut/error.hpp"
#include "steinercut/graph.hpp"
#include "steinercut/json_io.hpp"

using namespace steinercut;

namespace {

Graph path_sat() { return Graph({"s", "a", "t"}, {{"s", "a"}, {"a", "t"}}); }

SteinerGraph path_sg() { return SteinerGraph(path_sat(), {"s", "t"}); }

Graph c4() {
  return Graph({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}});
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("construction validates simplicity and names") {
  CHECK_THROWS_AS(Graph({"a", "a"}, std::vector<Edge>{}), error);      // duplicate node
  CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "a"}}), error);             // loop
  CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), error); // parallel edge
  CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "c"}}), error);             // unknown endpoint
  CHECK_THROWS_AS(Graph({}, std::vector<Edge>{}), error);              // empty node set

  Graph g = path_sat();
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.node_index("a") == 1);
  CHECK(g.degree(1) == 2);
  CHECK(g.find_edge(0, 1).has_value());
  CHECK(g.find_edge(1, 0) == g.find_edge(0, 1));
  CHECK(!g.find_edge(0, 2).has_value());
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
}

TEST_CASE("delta and incidence vectors") {
  Graph g = path_sat();
  CHECK(delta(g, cutset_from_names(g, {"s"})) == std::vector<int>{0});
  CHECK(delta(g, cutset_from_names(g, {"a"})) == std::vector<int>{0, 1});
  CHECK(incidence_vector(g, cutset_from_names(g, {"a"})) == EdgeVector{1, 1});

  // opposite sides of the 4-cycle: S = {1,2} cuts edges (2,3) and (4,1)
  Graph c = c4();
  CHECK(delta(c, cutset_from_names(c, {"1", "2"})) == std::vector<int>{1, 3});
  CHECK(incidence_vector(c, cutset_from_names(c, {"1", "2"})) == EdgeVector{0, 1, 0, 1});

  CHECK_THROWS_AS(delta(g, CutSet{0}), error);                       // empty side
  CHECK_THROWS_AS(delta(g, cutset_from_names(g, {"s", "a", "t"})), error);  // full side
}

TEST_CASE("connected components with deletions") {
  Graph g = path_sat();
  CHECK(connected_components(g).size() == 1);
  CHECK(is_connected(g));

  auto comps = connected_components(g, set_of({1}));  // delete the middle node
  REQUIRE(comps.size() == 2);
  CHECK(std::count(comps.begin(), comps.end(), set_of({0})) == 1);
  CHECK(std::count(comps.begin(), comps.end(), set_of({2})) == 1);

  comps = connected_components(g, 0, {0});  // delete edge s-a
  REQUIRE(comps.size() == 2);
  CHECK(std::count(comps.begin(), comps.end(), set_of({1, 2})) == 1);

  Graph two({"a", "b", "c"}, std::vector<Edge>{{0, 1}});
  CHECK(!is_connected(two));
  CHECK(connected_components(two).size() == 2);
}

TEST_CASE("steiner graph invariants") {
  CHECK_THROWS_AS(SteinerGraph(path_sat(), std::vector<std::string>{"s"}), error);  // |T| < 2
  CHECK_THROWS_AS(SteinerGraph(path_sat(), {"s", "x"}), error);                     // unknown terminal
  Graph two({"a", "b", "c"}, std::vector<Edge>{{0, 1}});
  CHECK_THROWS_AS(SteinerGraph(two, {"a", "c"}), error);  // disconnected

  SteinerGraph sg = path_sg();
  CHECK(sg.terminal_count() == 2);
  CHECK(sg.is_terminal(0));
  CHECK(!sg.is_terminal(1));
  CHECK(sg.graph().node_name(sg.base_terminal()) == "s");
}

TEST_CASE("steiner cut predicate and canonicalization") {
  SteinerGraph sg = path_sg();
  const Graph& g = sg.graph();
  CHECK(is_steiner_cut(sg, cutset_from_names(g, {"s"})));
  CHECK(is_steiner_cut(sg, cutset_from_names(g, {"s", "a"})));
  CHECK(!is_steiner_cut(sg, cutset_from_names(g, {"a"})));        // misses T
  CHECK(!is_steiner_cut(sg, cutset_from_names(g, {"s", "t"})));   // T \ S empty
  CHECK_THROWS_AS(is_steiner_cut(sg, CutSet{0}), error);

  // t* = "s"; representatives keep it outside
  CHECK(canonical_cut(sg, cutset_from_names(g, {"s"})) == cutset_from_names(g, {"a", "t"}));
  CHECK(canonical_cut(sg, cutset_from_names(g, {"t"})) == cutset_from_names(g, {"t"}));

  // ordering: size first, then sorted name sequence
  CHECK(cutset_less(g, cutset_from_names(g, {"t"}), cutset_from_names(g, {"a", "t"})));
  CHECK(cutset_less(g, cutset_from_names(g, {"a"}), cutset_from_names(g, {"t"})));
}

TEST_CASE("node set helpers") {
  NodeSet s = set_of({0, 2, 5});
  CHECK(set_size(s) == 3);
  CHECK(set_contains(s, 2));
  CHECK(!set_contains(s, 1));
  CHECK(is_subset(set_of({0, 2}), s));
  CHECK(!is_subset(set_of({0, 1}), s));
  CHECK(set_elements(s) == std::vector<int>{0, 2, 5});
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("json");

static const char* kSample = R"({"nodes": ["s","a","t"], "edges": [["s","a"],["a","t"]], "terminals": ["s","t"], "weights": ["1","2/3"]})";

TEST_CASE("parses the wire schema") {
  ParsedGraph p = parse_graph_json(kSample);
  CHECK(p.graph == path_sat());
  CHECK(p.terminals == std::vector<std::string>{"s", "t"});
  REQUIRE(p.weights.has_value());
  CHECK(*p.weights == EdgeVector{Rat(1), Rat(2, 3)});

  WeightedSteinerGraph wg = weighted_graph_from_json(kSample);
  CHECK(wg.sg == path_sg());
  CHECK(wg.weights == EdgeVector{Rat(1), Rat(2, 3)});

  // weights are optional and default to all ones
  WeightedSteinerGraph unit = weighted_graph_from_json(
      R"({"nodes":["s","a","t"],"edges":[["s","a"],["a","t"]],"terminals":["s","t"]})");
  CHECK(unit.weights == EdgeVector{1, 1});
}

TEST_CASE("named diagnostics for schema violations") {
  auto expect_parse_error = [](const std::string& text, const std::string& needle) {
    try {
      weighted_graph_from_json(text);
      FAIL_CHECK("no error for: " << text);
    } catch (const error& e) {
      CHECK(e.kind() == errc::parse);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_parse_error("not json", "JSON");
  expect_parse_error(R"({"edges":[],"terminals":[]})", "nodes");
  expect_parse_error(R"({"nodes":["a","b"],"edges":[["a","x"]],"terminals":["a","b"]})", "edges");
  expect_parse_error(R"({"nodes":["a","b"],"edges":[["a","b"],["a","b"]],"terminals":["a","b"]})",
                     "edges");
  expect_parse_error(R"({"nodes":["a","b"],"edges":[["a","b"]],"terminals":["a"]})", "terminals");
  expect_parse_error(
      R"({"nodes":["a","b"],"edges":[["a","b"]],"terminals":["a","b"],"weights":["1","2"]})",
      "weights");
  expect_parse_error(
      R"({"nodes":["a","b"],"edges":[["a","b"]],"terminals":["a","b"],"weights":["-1"]})",
      "weights");
  expect_parse_error(
      R"({"nodes":["a","b"],"edges":[["a","b"]],"terminals":["a","b"],"color":"red"})", "color");
}

TEST_CASE("emit round-trips exactly") {
  WeightedSteinerGraph wg = weighted_graph_from_json(kSample);
  std::string out = graph_to_json(wg);
  WeightedSteinerGraph back = weighted_graph_from_json(out);
  CHECK(back == wg);
}

TEST_SUITE_END();

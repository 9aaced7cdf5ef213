#include <doctest.h>

#include <vector>

#include "steinercut/error.hpp"
#include "steinercut/treecactus.hpp"

using namespace steinercut;

namespace {

Graph c4() {
  return Graph({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}});
}

Graph triangle() { return Graph({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}}); }

// Triangle 1-2-3 with the pendant edge 3-4.
Graph paw() {
  return Graph({"1", "2", "3", "4"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}, {"3", "4"}});
}

// Two triangles sharing node 3.
Graph bowtie() {
  return Graph({"1", "2", "3", "4", "5"},
               {{"1", "2"}, {"1", "3"}, {"2", "3"}, {"3", "4"}, {"3", "5"}, {"4", "5"}});
}

Graph prism() {
  return Graph({"a1", "a2", "a3", "b1", "b2", "b3"},
               {{"a1", "a2"},
                {"a1", "a3"},
                {"a2", "a3"},
                {"b1", "b2"},
                {"b1", "b3"},
                {"b2", "b3"},
                {"a1", "b1"},
                {"a2", "b2"},
                {"a3", "b3"}});
}

std::vector<std::string> all_names(const Graph& g) { return g.node_names(); }

}  // namespace

TEST_SUITE_BEGIN("treecactus");

TEST_CASE("classify trees") {
  Graph path({"s", "a", "t"}, {{"s", "a"}, {"a", "t"}});
  CHECK(classify_tree_cactus(SteinerGraph(path, {"s", "t"})) == TCKind::steiner_tree);
  CHECK(classify_tree_cactus(SteinerGraph(path, {"s", "t", "a"})) == TCKind::steiner_tree);
  // Leaf t is not a terminal.
  CHECK(classify_tree_cactus(SteinerGraph(path, {"s", "a"})) == TCKind::neither);

  Graph star({"m", "x", "y", "z"}, {{"m", "x"}, {"m", "y"}, {"m", "z"}});
  CHECK(classify_tree_cactus(SteinerGraph(star, {"x", "y", "z"})) == TCKind::steiner_tree);
  CHECK(classify_tree_cactus(SteinerGraph(star, {"x", "y"})) == TCKind::neither);

  Graph k2({"s", "t"}, {{"s", "t"}});
  CHECK(classify_tree_cactus(SteinerGraph(k2, {"s", "t"})) == TCKind::steiner_tree);
}

TEST_CASE("classify cacti") {
  CHECK(classify_tree_cactus(SteinerGraph(c4(), {"1", "2", "3", "4"})) == TCKind::steiner_cactus);
  CHECK(classify_tree_cactus(SteinerGraph(c4(), {"1", "2", "3"})) == TCKind::steiner_cactus);
  // Only two cycle nodes are cut nodes or terminals.
  CHECK(classify_tree_cactus(SteinerGraph(c4(), {"1", "2"})) == TCKind::neither);

  CHECK(classify_tree_cactus(SteinerGraph(paw(), {"1", "2", "4"})) == TCKind::steiner_cactus);
  CHECK(classify_tree_cactus(SteinerGraph(paw(), {"1", "4"})) == TCKind::neither);

  CHECK(classify_tree_cactus(SteinerGraph(bowtie(), {"1", "2", "4", "5"})) ==
        TCKind::steiner_cactus);

  // The prism is 2-connected but not a cycle, so it is no cactus at all.
  CHECK(classify_tree_cactus(SteinerGraph(prism(), all_names(prism()))) == TCKind::neither);
}

TEST_CASE("decompose_cactus") {
  CactusDecomposition dec = decompose_cactus(c4());
  REQUIRE(dec.cycles.size() == 1);
  CHECK(dec.cycles[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(dec.bridges.empty());
  CHECK(dec.cycle_degrees == std::vector<int>{0});
  CHECK(defect(dec, 0) == 3);

  dec = decompose_cactus(paw());
  REQUIRE(dec.cycles.size() == 1);
  CHECK(dec.cycles[0] == std::vector<int>{0, 1, 2});
  CHECK(dec.bridges == std::vector<int>{3});
  CHECK(dec.cycle_degrees == std::vector<int>{1});
  CHECK(defect(dec, 0) == 2);

  dec = decompose_cactus(bowtie());
  REQUIRE(dec.cycles.size() == 2);
  CHECK(dec.cycles[0] == std::vector<int>{0, 1, 2});
  CHECK(dec.cycles[1] == std::vector<int>{3, 4, 5});
  CHECK(dec.bridges.empty());
  CHECK(dec.cycle_degrees == std::vector<int>{1, 1});

  dec = decompose_cactus(Graph({"s", "a", "t"}, {{"s", "a"}, {"a", "t"}}));
  CHECK(dec.cycles.empty());
  CHECK(dec.bridges == std::vector<int>{0, 1});
}

TEST_CASE("decompose_cactus rejects non-cacti") {
  Graph k4({"1", "2", "3", "4"},
           {{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}});
  CHECK_THROWS_AS(decompose_cactus(k4), error);
  CHECK_THROWS_AS(decompose_cactus(prism()), error);
  CHECK_THROWS_AS(decompose_cactus(Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}})), error);
}

TEST_CASE("canonical_inequality") {
  Graph path({"s", "a", "t"}, {{"s", "a"}, {"a", "t"}});
  Inequality ineq = canonical_inequality(SteinerGraph(path, {"s", "t"}));
  CHECK(ineq.coeffs == EdgeVector{1, 1});
  CHECK(ineq.rhs == 1);

  ineq = canonical_inequality(SteinerGraph(c4(), {"1", "2", "3", "4"}));
  CHECK(ineq.coeffs == EdgeVector{1, 1, 1, 1});
  CHECK(ineq.rhs == 2);

  ineq = canonical_inequality(SteinerGraph(paw(), {"1", "2", "4"}));
  CHECK(ineq.coeffs == EdgeVector{1, 1, 1, 2});
  CHECK(ineq.rhs == 2);

  CHECK_THROWS_AS(canonical_inequality(SteinerGraph(c4(), {"1", "2"})), error);
}

TEST_CASE("enumerate_steiner_subtrees") {
  // Triangle with terminals a, b: the direct edge and the two-edge detour.
  auto trees = enumerate_steiner_subtrees(SteinerGraph(triangle(), {"a", "b"}));
  REQUIRE(trees.size() == 2);
  CHECK(trees[0] == std::vector<int>{0});
  CHECK(trees[1] == std::vector<int>{1, 2});

  trees = enumerate_steiner_subtrees(SteinerGraph(triangle(), {"a", "b", "c"}));
  CHECK(trees.size() == 3);

  trees = enumerate_steiner_subtrees(SteinerGraph(c4(), {"1", "2", "3", "4"}));
  CHECK(trees.size() == 4);
  for (const auto& t : trees) CHECK(t.size() == 3);

  Graph star({"m", "x", "y", "z"}, {{"m", "x"}, {"m", "y"}, {"m", "z"}});
  trees = enumerate_steiner_subtrees(SteinerGraph(star, {"x", "y", "z"}));
  REQUIRE(trees.size() == 1);
  CHECK(trees[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("enumerate_steiner_subcacti") {
  auto cacti = enumerate_steiner_subcacti(SteinerGraph(c4(), {"1", "2", "3", "4"}));
  REQUIRE(cacti.size() == 1);
  CHECK(cacti[0] == std::vector<int>{0, 1, 2, 3});

  cacti = enumerate_steiner_subcacti(SteinerGraph(triangle(), {"a", "b", "c"}));
  REQUIRE(cacti.size() == 1);
  CHECK(cacti[0] == std::vector<int>{0, 1, 2});

  // Two terminals can never give three terminal-or-cut nodes on the cycle.
  CHECK(enumerate_steiner_subcacti(SteinerGraph(triangle(), {"a", "b"})).empty());
}

TEST_CASE("enumerate_facets_le5") {
  auto facets = enumerate_facets_le5(SteinerGraph(triangle(), {"a", "b"}));
  REQUIRE(facets.size() == 2);
  CHECK(facets[0].ineq.coeffs == EdgeVector{0, 1, 1});
  CHECK(facets[0].ineq.rhs == 1);
  CHECK(facets[0].kind == FacetKind::tree);
  CHECK(facets[1].ineq.coeffs == EdgeVector{1, 0, 0});
  CHECK(facets[1].ineq.rhs == 1);

  facets = enumerate_facets_le5(SteinerGraph(triangle(), {"a", "b", "c"}));
  REQUIRE(facets.size() == 4);
  CHECK(facets[0].ineq.coeffs == EdgeVector{0, 1, 1});
  CHECK(facets[1].ineq.coeffs == EdgeVector{1, 0, 1});
  CHECK(facets[2].ineq.coeffs == EdgeVector{1, 1, 0});
  CHECK(facets[3].ineq.coeffs == EdgeVector{1, 1, 1});
  CHECK(facets[3].ineq.rhs == 2);
  CHECK(facets[3].kind == FacetKind::cactus);

  CHECK(enumerate_facets_le5(SteinerGraph(c4(), {"1", "2", "3", "4"})).size() == 5);

  Graph c6({"1", "2", "3", "4", "5", "6"},
           {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"6", "1"}});
  CHECK_THROWS_AS(enumerate_facets_le5(SteinerGraph(c6, all_names(c6))), error);
}

TEST_CASE("subgraph guard") {
  SteinerGraph g(c4(), {"1", "2", "3", "4"});
  CHECK_THROWS_AS(enumerate_steiner_subtrees(g, SubgraphGuards{3}), error);
  try {
    enumerate_steiner_subtrees(g, SubgraphGuards{3});
  } catch (const error& e) {
    CHECK(e.kind() == errc::guard);
  }
}

TEST_CASE("cut_dominant_degree5_facets") {
  // 4 spanning paths plus the cycle itself.
  auto facets = cut_dominant_degree5_facets(c4());
  CHECK(facets.size() == 5);
  // tau = 4 <= 5, so the dedicated routine must agree with the generic one.
  auto le5 = enumerate_facets_le5(SteinerGraph(c4(), {"1", "2", "3", "4"}));
  REQUIRE(le5.size() == facets.size());
  for (size_t i = 0; i < facets.size(); ++i) {
    CHECK(facets[i].ineq == le5[i].ineq);
    CHECK(facets[i].kind == le5[i].kind);
  }

  Graph k4({"1", "2", "3", "4"},
           {{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}});
  facets = cut_dominant_degree5_facets(k4);
  int trees = 0, cacti = 0;
  for (const FoundFacet& f : facets) {
    (f.kind == FacetKind::tree ? trees : cacti) += 1;
  }
  CHECK(trees == 16);
  CHECK(cacti == 15);

  // A path is its own unique spanning tree with two leaves.
  std::vector<std::string> nodes{"1", "2", "3", "4", "5", "6", "7"};
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i + 1 < 7; ++i) edges.emplace_back(nodes[i], nodes[i + 1]);
  CHECK(cut_dominant_degree5_facets(Graph(nodes, edges)).size() == 1);

  // A six-leaf star exceeds the leaf bound, so nothing of degree five remains.
  std::vector<std::pair<std::string, std::string>> spokes;
  for (int i = 1; i < 7; ++i) spokes.emplace_back("0", nodes[i - 1]);
  std::vector<std::string> star_nodes{"0", "1", "2", "3", "4", "5", "6"};
  CHECK(cut_dominant_degree5_facets(Graph(star_nodes, spokes)).empty());

  Graph c6({"1", "2", "3", "4", "5", "6"},
           {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"6", "1"}});
  CHECK(cut_dominant_degree5_facets(c6).size() == 7);
}

TEST_SUITE_END();

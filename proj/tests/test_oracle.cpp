#include <doctest.h>

#include <string>
#include <vector>

#include "steinercut/error.hpp"
#include "steinercut/facets.hpp"
#include "steinercut/oracle.hpp"

using namespace steinercut;

namespace {

SteinerGraph unit_path() {
  return SteinerGraph(Graph({"s", "a", "t"}, {{"s", "a"}, {"a", "t"}}), {"s", "t"});
}

Graph triangle() { return Graph({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}}); }

Graph c4() {
  return Graph({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}});
}

Graph cycle(int n) {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i) nodes.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i) edges.emplace_back(nodes[i], nodes[(i + 1) % n]);
  return Graph(nodes, edges);
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

Graph pyramid_graph() {
  return Graph({"u", "v1", "v2", "v3", "w1", "w2", "w3"},
               {{"v1", "v2"},
                {"v1", "v3"},
                {"v2", "v3"},
                {"v1", "w1"},
                {"v2", "w2"},
                {"v3", "w3"},
                {"u", "w1"},
                {"u", "w2"},
                {"u", "w3"}});
}

bool same_facets(const std::vector<FoundFacet>& a, const std::vector<FoundFacet>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].ineq == b[i].ineq)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("validate_inequality") {
  SteinerGraph path = unit_path();
  CHECK(validate_inequality(path, Inequality{{1, 1}, 1}).valid);
  ValidationResult bad = validate_inequality(path, Inequality{{1, 1}, 2});
  CHECK_FALSE(bad.valid);
  REQUIRE(bad.violated.has_value());
  CHECK(cutset_names(path.graph(), *bad.violated) == std::vector<std::string>{"t"});

  SteinerGraph sq(c4(), {"1", "2", "3", "4"});
  CHECK(validate_inequality(sq, Inequality{{1, 1, 1, 1}, 2}).valid);
  bad = validate_inequality(sq, Inequality{{1, 1, 1, 1}, 3});
  CHECK_FALSE(bad.valid);
  REQUIRE(bad.violated.has_value());
  CHECK(cutset_names(sq.graph(), *bad.violated) == std::vector<std::string>{"2"});
}

TEST_CASE("oracle on the two-edge path") {
  auto facets = oracle_facets(unit_path());
  REQUIRE(facets.size() == 1);
  CHECK(facets[0].ineq.coeffs == EdgeVector{1, 1});
  CHECK(facets[0].ineq.rhs == 1);
  CHECK(facets[0].kind == FacetKind::oracle);
}

TEST_CASE("oracle on triangles") {
  auto facets = oracle_facets(SteinerGraph(triangle(), {"a", "b"}));
  REQUIRE(facets.size() == 2);
  CHECK(facets[0].ineq == Inequality{{0, 1, 1}, 1});
  CHECK(facets[1].ineq == Inequality{{1, 0, 0}, 1});

  facets = oracle_facets(SteinerGraph(triangle(), {"a", "b", "c"}));
  REQUIRE(facets.size() == 4);
  CHECK(facets[0].ineq == Inequality{{0, 1, 1}, 1});
  CHECK(facets[1].ineq == Inequality{{1, 0, 1}, 1});
  CHECK(facets[2].ineq == Inequality{{1, 1, 0}, 1});
  CHECK(facets[3].ineq == Inequality{{1, 1, 1}, 2});
}

TEST_CASE("oracle on the four-cycle") {
  auto facets = oracle_facets(SteinerGraph(c4(), {"1", "2", "3", "4"}));
  REQUIRE(facets.size() == 5);
  CHECK(facets[0].ineq == Inequality{{0, 1, 1, 1}, 1});
  CHECK(facets[1].ineq == Inequality{{1, 0, 1, 1}, 1});
  CHECK(facets[2].ineq == Inequality{{1, 1, 0, 1}, 1});
  CHECK(facets[3].ineq == Inequality{{1, 1, 1, 0}, 1});
  CHECK(facets[4].ineq == Inequality{{1, 1, 1, 1}, 2});

  // Two terminals across the cycle: the two edge-disjoint paths.
  facets = oracle_facets(SteinerGraph(c4(), {"1", "3"}));
  REQUIRE(facets.size() == 2);
  CHECK(facets[0].ineq == Inequality{{0, 0, 1, 1}, 1});
  CHECK(facets[1].ineq == Inequality{{1, 1, 0, 0}, 1});
}

TEST_CASE("naive tier agrees with double description") {
  CHECK(same_facets(oracle_facets_naive(unit_path()), oracle_facets(unit_path())));
  for (std::vector<std::string> ts :
       {std::vector<std::string>{"a", "b"}, std::vector<std::string>{"a", "b", "c"}}) {
    SteinerGraph g(triangle(), ts);
    CHECK(same_facets(oracle_facets_naive(g), oracle_facets(g)));
  }
  for (std::vector<std::string> ts :
       {std::vector<std::string>{"1", "2", "3", "4"}, std::vector<std::string>{"1", "3"}}) {
    SteinerGraph g(c4(), ts);
    CHECK(same_facets(oracle_facets_naive(g), oracle_facets(g)));
  }
}

TEST_CASE("naive tier refuses oversized instances") {
  SteinerGraph g(prism(), prism().node_names());
  CHECK_THROWS_WITH_AS(oracle_facets_naive(g), doctest::Contains("budget"), error);
}

TEST_CASE("oracle guards") {
  CHECK_THROWS_AS(oracle_facets(SteinerGraph(cycle(8), cycle(8).node_names())), error);
  try {
    oracle_facets(SteinerGraph(cycle(8), cycle(8).node_names()));
  } catch (const error& e) {
    CHECK(e.kind() == errc::guard);
  }
  CHECK_THROWS_AS(oracle_facets(SteinerGraph(cycle(11), {"1", "2"})), error);

  // Raising the guards admits the eight-cycle.
  auto facets = oracle_facets(SteinerGraph(cycle(8), cycle(8).node_names()),
                              OracleGuards{12, 256});
  CHECK(facets.size() == 9);  // eight spanning paths plus the cycle
}

TEST_CASE("oracle on the prism cross-checked against certification") {
  SteinerGraph g(prism(), prism().node_names());
  auto facets = oracle_facets(g);
  CHECK(facets.size() > 10);
  bool found_dense = false;
  for (size_t i = 0; i < facets.size(); ++i) {
    if (i > 0) CHECK(inequality_less(facets[i - 1].ineq, facets[i].ineq));
    const Inequality& ineq = facets[i].ineq;
    CHECK(validate_inequality(g, ineq).valid);
    // Every oracle facet must pass independent certification on its support.
    WeightedSteinerGraph support = support_restriction(WeightedSteinerGraph(g, ineq.coeffs));
    VerifyResult vr = verify_facet(support);
    CHECK(vr.facet());
    CHECK(vr.gamma_value == ineq.rhs);
    if (ineq == Inequality{{1, 1, 1, 1, 1, 1, 2, 2, 2}, 4}) found_dense = true;
  }
  CHECK(found_dense);
}

TEST_CASE("prism and pyramid minors") {
  CHECK(has_prism_or_pyramid_minor(prism()));
  CHECK(has_prism_or_pyramid_minor(pyramid_graph()));

  // Subdividing a matching edge leaves a topological prism.
  Graph sub({"a1", "a2", "a3", "b1", "b2", "b3", "m"},
            {{"a1", "a2"},
             {"a1", "a3"},
             {"a2", "a3"},
             {"b1", "b2"},
             {"b1", "b3"},
             {"b2", "b3"},
             {"a1", "m"},
             {"m", "b1"},
             {"a2", "b2"},
             {"a3", "b3"}});
  CHECK(has_prism_or_pyramid_minor(sub));

  CHECK_FALSE(has_prism_or_pyramid_minor(cycle(6)));
  Graph k4({"1", "2", "3", "4"},
           {{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}});
  CHECK_FALSE(has_prism_or_pyramid_minor(k4));
  Graph k33({"1", "2", "3", "4", "5", "6"},
            {{"1", "4"},
             {"1", "5"},
             {"1", "6"},
             {"2", "4"},
             {"2", "5"},
             {"2", "6"},
             {"3", "4"},
             {"3", "5"},
             {"3", "6"}});
  CHECK_FALSE(has_prism_or_pyramid_minor(k33));
  CHECK_FALSE(has_prism_or_pyramid_minor(Graph({"s", "a", "t"}, {{"s", "a"}, {"a", "t"}})));

  CHECK_THROWS_AS(has_prism_or_pyramid_minor(cycle(13)), error);
}

TEST_SUITE_END();

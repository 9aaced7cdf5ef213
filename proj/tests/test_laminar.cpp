#include <doctest.h>

#include <algorithm>
#include <vector>

#include "steinercut/error.hpp"
#include "steinercut/facets.hpp"
#include "steinercut/laminar.hpp"
#include "steinercut/linalg.hpp"

using namespace steinercut;

namespace {

Graph c4() {
  return Graph({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}});
}

WeightedSteinerGraph c4_all_terminal() {
  return WeightedSteinerGraph(SteinerGraph(c4(), {"1", "2", "3", "4"}), {1, 1, 1, 1});
}

WeightedSteinerGraph prism_facet() {
  Graph g({"a1", "a2", "a3", "b1", "b2", "b3"},
          {{"a1", "a2"},
           {"a1", "a3"},
           {"a2", "a3"},
           {"b1", "b2"},
           {"b1", "b3"},
           {"b2", "b3"},
           {"a1", "b1"},
           {"a2", "b2"},
           {"a3", "b3"}});
  return WeightedSteinerGraph(SteinerGraph(std::move(g), {"a1", "a2", "a3", "b1", "b2", "b3"}),
                              {1, 1, 1, 1, 1, 1, 2, 2, 2});
}

std::vector<std::string> names(const Graph& g, const CutSet& s) { return cutset_names(g, s); }

}  // namespace

TEST_SUITE_BEGIN("laminar");

TEST_CASE("sets_intersect needs all three regions") {
  CHECK(!sets_intersect(set_of({1}), set_of({2})));        // disjoint
  CHECK(!sets_intersect(set_of({1}), set_of({1, 2})));     // nested
  CHECK(!sets_intersect(set_of({1, 2}), set_of({1, 2})));  // equal
  CHECK(sets_intersect(set_of({1, 2}), set_of({2, 3})));
  CHECK(sets_intersect(set_of({0, 3}), set_of({3, 5, 6})));
}

TEST_CASE("is_laminar") {
  CHECK(is_laminar({}));
  CHECK(is_laminar({set_of({1})}));
  CHECK(is_laminar({set_of({1}), set_of({2}), set_of({1, 2})}));
  CHECK(!is_laminar({set_of({1, 2}), set_of({2, 3})}));
  CHECK(!is_laminar({set_of({1}), set_of({1})}));  // members must be distinct
  CHECK(!is_laminar({NodeSet{0}}));                // and nonempty
}

TEST_CASE("minimal_members keeps input order") {
  SetFamily fam = {set_of({1, 2, 3}), set_of({1}), set_of({2}), set_of({1, 2})};
  SetFamily min = minimal_members(fam);
  REQUIRE(min.size() == 2);
  CHECK(min[0] == set_of({1}));
  CHECK(min[1] == set_of({2}));
}

TEST_CASE("intersecting_members") {
  SetFamily fam = {set_of({1}), set_of({2}), set_of({3, 4}), set_of({1, 2}), set_of({2, 3, 4})};
  CHECK(intersecting_members(set_of({2, 3}), fam) == std::vector<int>{2, 3});
  CHECK(intersecting_members(set_of({1}), fam).empty());
}

TEST_CASE("laminar_bound_check") {
  NodeSet ground = set_of({1, 2, 3});
  CHECK(laminar_bound_check({set_of({1}), set_of({2}), set_of({3}), set_of({1, 2})}, ground));
  // Seven distinct sets over three elements must overshoot |V| + |L_min| - 1.
  SetFamily all = {set_of({1}),    set_of({2}),    set_of({3}),    set_of({1, 2}),
                   set_of({1, 3}), set_of({2, 3}), set_of({1, 2, 3})};
  CHECK(!laminar_bound_check(all, ground));
}

TEST_CASE("width counts minimal members and a unique maximum") {
  CHECK(width({set_of({1}), set_of({2})}) == 2);
  CHECK(width({set_of({1}), set_of({1, 2})}) == 2);
  CHECK(width({set_of({1}), set_of({2}), set_of({1, 2})}) == 3);
  CHECK(width({set_of({5})}) == 2);  // one minimal member which is also the unique maximum
  CHECK_THROWS_AS(width({}), error);
}

TEST_CASE("uncross prefers intersection and union") {
  WeightedSteinerGraph wg = c4_all_terminal();
  CutSet s1 = cutset_from_names(wg.graph(), {"2", "3"});
  CutSet s2 = cutset_from_names(wg.graph(), {"3", "4"});
  UncrossResult res = uncross(wg, s1, s2);
  CHECK(res.variant == UncrossVariant::cap_cup);
  CHECK(names(wg.graph(), res.a) == std::vector<std::string>{"3"});
  CHECK(names(wg.graph(), res.b) == std::vector<std::string>{"2", "3", "4"});
  // The incidence vectors sum exactly.
  const Graph& g = wg.graph();
  for (int e = 0; e < g.edge_count(); ++e) {
    Rat lhs = incidence_vector(g, s1)[e] + incidence_vector(g, s2)[e];
    Rat rhs = incidence_vector(g, res.a)[e] + incidence_vector(g, res.b)[e];
    CHECK(lhs == rhs);
  }
}

TEST_CASE("uncross falls back to the differences") {
  // With terminals {1,2,4} the intersection {3} carries no terminal, so the
  // cap/cup pair is not a pair of Steiner cuts.
  WeightedSteinerGraph wg(SteinerGraph(c4(), {"1", "2", "4"}), {1, 1, 1, 1});
  CutSet s1 = cutset_from_names(wg.graph(), {"2", "3"});
  CutSet s2 = cutset_from_names(wg.graph(), {"3", "4"});
  UncrossResult res = uncross(wg, s1, s2);
  CHECK(res.variant == UncrossVariant::difference);
  CHECK(names(wg.graph(), res.a) == std::vector<std::string>{"2"});
  CHECK(names(wg.graph(), res.b) == std::vector<std::string>{"4"});
}

TEST_CASE("uncross validates its inputs") {
  WeightedSteinerGraph wg = c4_all_terminal();
  // Nested, not intersecting.
  CHECK_THROWS_AS(uncross(wg, cutset_from_names(wg.graph(), {"2"}),
                          cutset_from_names(wg.graph(), {"2", "3"})),
                  error);
  // {2,4} intersects {2,3} but weighs 4 > gamma, so it is not a root.
  CHECK_THROWS_AS(uncross(wg, cutset_from_names(wg.graph(), {"2", "4"}),
                          cutset_from_names(wg.graph(), {"2", "3"})),
                  error);
  // Non-canonical representatives are rejected.
  CHECK_THROWS_AS(uncross(wg, cutset_from_names(wg.graph(), {"1", "2"}),
                          cutset_from_names(wg.graph(), {"2", "3"})),
                  error);
}

TEST_CASE("laminar_root_basis on the all-terminal 4-cycle") {
  LaminarBasis basis = laminar_root_basis(c4_all_terminal());
  CHECK(basis.gamma_value == 2);
  REQUIRE(basis.members.size() == 4);
  CHECK(names(c4(), basis.members[0]) == std::vector<std::string>{"2"});
  CHECK(names(c4(), basis.members[1]) == std::vector<std::string>{"3"});
  CHECK(names(c4(), basis.members[2]) == std::vector<std::string>{"4"});
  CHECK(names(c4(), basis.members[3]) == std::vector<std::string>{"2", "3"});
}

TEST_CASE("laminar_root_basis on the unit path") {
  SteinerGraph path(Graph({"s", "a", "t"}, {{"s", "a"}, {"a", "t"}}), {"s", "t"});
  LaminarBasis basis = laminar_root_basis(WeightedSteinerGraph(path, {1, 1}));
  CHECK(basis.gamma_value == 1);
  REQUIRE(basis.members.size() == 2);
  CHECK(names(path.graph(), basis.members[0]) == std::vector<std::string>{"t"});
  CHECK(names(path.graph(), basis.members[1]) == std::vector<std::string>{"a", "t"});
}

TEST_CASE("laminar_root_basis on the weighted prism") {
  WeightedSteinerGraph wg = prism_facet();
  LaminarBasis basis = laminar_root_basis(wg);
  CHECK(basis.gamma_value == 4);
  REQUIRE(basis.members.size() == 9);

  SetFamily fam;
  for (const CutSet& s : basis.members) fam.push_back(s.members);
  CHECK(is_laminar(fam));
  CHECK(laminar_bound_check(fam, wg.graph().all_nodes()));

  // Every member is a canonical root and the family has full rank.
  std::vector<RatRow> rows;
  for (const CutSet& s : basis.members) {
    CHECK(cut_weight(wg, s) == 4);
    CHECK(canonical_cut(wg.sg, s) == s);
    rows.push_back(incidence_vector(wg.graph(), s));
  }
  CHECK(rank(RatMatrix::from_rows(rows)) == 9);

  // The minimal members are exactly the terminal singletons other than t*.
  SetFamily min = minimal_members(fam);
  REQUIRE(min.size() == 5);
  for (NodeSet m : min) {
    CHECK(set_size(m) == 1);
    CHECK(is_subset(m, wg.sg.terminals()));
    CHECK(!set_contains(m, wg.sg.base_terminal()));
  }
}

TEST_CASE("laminar_root_basis requires a facet-inducing input") {
  SteinerGraph path(Graph({"s", "a", "t"}, {{"s", "a"}, {"a", "t"}}), {"s", "t"});
  CHECK_THROWS_AS(laminar_root_basis(WeightedSteinerGraph(path, {1, 2})), error);
}

TEST_SUITE_END();

#pragma once

#include <optional>
#include <vector>

#include "steinercut/facets.hpp"
#include "steinercut/graph.hpp"

namespace steinercut {

struct OracleGuards {
  int max_edges = 10;
  int max_cuts = 64;
};

// Ground truth: the complete list of nontrivial facets of the Steiner cut
// dominant, computed as the vertices of the blocker
//   {c >= 0 : c . chi(delta S) >= 1 for every Steiner cut S}
// by exact double description on the homogenized cone, then scaled to minimum
// integer form. Purely polyhedral; no structural theory feeds in.
std::vector<FoundFacet> oracle_facets(const SteinerGraph& g, const OracleGuards& guards = {});

// Independent naive tier: solves every |E|-subset of tight constraints and
// keeps feasible unique solutions. Exponential; refuses instances with more
// than `subset_budget` candidate subsets. Exists to cross-check oracle_facets.
std::vector<FoundFacet> oracle_facets_naive(const SteinerGraph& g,
                                            long long subset_budget = 200000);

struct ValidationResult {
  bool valid = false;
  std::optional<CutSet> violated;  // witness cut when invalid
};

// Does c x >= rhs hold for every Steiner cut incidence vector?
ValidationResult validate_inequality(const SteinerGraph& g, const Inequality& ineq,
                                     const EnumGuards& guards = {});

// Prism (two triangles joined by a perfect matching) or pyramid (triangle with
// three pendant 2-paths meeting at an apex) minor. Both patterns have maximum
// degree three, so minor containment is decided via topological containment.
bool has_prism_or_pyramid_minor(const Graph& g, int max_nodes_guard = 12);

}  // namespace steinercut

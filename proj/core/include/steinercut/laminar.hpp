#pragma once

#include <vector>

#include "steinercut/cuts.hpp"
#include "steinercut/graph.hpp"

namespace steinercut {

using SetFamily = std::vector<NodeSet>;

// A and B intersect iff A∩B, A\B and B\A are all nonempty (proper crossing;
// disjoint or nested pairs do not intersect).
bool sets_intersect(NodeSet a, NodeSet b);

// No two members intersect. Members must be distinct and nonempty.
bool is_laminar(const SetFamily& family);

// Inclusion-minimal members.
SetFamily minimal_members(const SetFamily& family);

// I(S, L): indices of members intersecting s.
std::vector<int> intersecting_members(NodeSet s, const SetFamily& family);

// |L| <= |ground| + |L_min| - 1, the size bound every laminar family obeys.
bool laminar_bound_check(const SetFamily& family, NodeSet ground);

// |L_min|, plus one when the family has a unique maximal member. Requires a
// nonempty laminar family.
int width(const SetFamily& family);

enum class UncrossVariant { cap_cup, difference };

struct UncrossResult {
  UncrossVariant variant;
  CutSet a, b;
};

// For intersecting roots s1, s2 of wg: returns two roots replacing them whose
// cut incidence vectors sum to chi(delta s1) + chi(delta s2) exactly. Prefers
// the (s1∩s2, s1∪s2) pair; falls back to (s1\s2, s2\s1). The identity is
// re-verified in exact arithmetic before returning.
UncrossResult uncross(const WeightedSteinerGraph& wg, const CutSet& s1, const CutSet& s2,
                      const EnumGuards& guards = {});

struct LaminarBasis {
  std::vector<CutSet> members;  // cutset_less order, t* outside every member
  Rat gamma_value;
};

// A laminar family of |E| roots with linearly independent incidence vectors,
// built by growing a maximal laminar independent family and uncrossing
// candidates against it (the measure |I(S, L)| strictly decreases, so the
// construction terminates). Requires a facet-inducing input.
LaminarBasis laminar_root_basis(const WeightedSteinerGraph& wg, const EnumGuards& guards = {});

}  // namespace steinercut

#include "steinercut/laminar.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "steinercut/facets.hpp"
#include "steinercut/linalg.hpp"

namespace steinercut {

bool sets_intersect(NodeSet a, NodeSet b) {
  return (a & b) != 0 && (a & ~b) != 0 && (b & ~a) != 0;
}

bool is_laminar(const SetFamily& family) {
  for (size_t i = 0; i < family.size(); ++i) {
    if (family[i] == 0) return false;
    for (size_t j = i + 1; j < family.size(); ++j) {
      if (family[i] == family[j] || sets_intersect(family[i], family[j])) return false;
    }
  }
  return true;
}

SetFamily minimal_members(const SetFamily& family) {
  SetFamily out;
  for (size_t i = 0; i < family.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < family.size() && minimal; ++j) {
      if (j != i && family[j] != family[i] && is_subset(family[j], family[i])) minimal = false;
    }
    if (minimal) out.push_back(family[i]);
  }
  return out;
}

std::vector<int> intersecting_members(NodeSet s, const SetFamily& family) {
  std::vector<int> out;
  for (size_t i = 0; i < family.size(); ++i) {
    if (sets_intersect(s, family[i])) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool laminar_bound_check(const SetFamily& family, NodeSet ground) {
  return static_cast<int>(family.size()) <=
         set_size(ground) + static_cast<int>(minimal_members(family).size()) - 1;
}

int width(const SetFamily& family) {
  if (family.empty()) fail(errc::invalid_input, "width: family is empty");
  if (!is_laminar(family)) fail(errc::invalid_input, "width: family is not laminar");
  int w = static_cast<int>(minimal_members(family).size());
  int maximal = 0;
  for (size_t i = 0; i < family.size(); ++i) {
    bool is_max = true;
    for (size_t j = 0; j < family.size() && is_max; ++j) {
      if (j != i && family[j] != family[i] && is_subset(family[i], family[j])) is_max = false;
    }
    maximal += is_max;
  }
  return maximal == 1 ? w + 1 : w;
}

namespace {

// One uncrossing step on intersecting roots whose preconditions the caller has
// already established. Submodularity makes any replacement pair of Steiner
// cuts automatically minimum once the incidence identity holds, but both
// facts are re-verified exactly.
UncrossResult uncross_roots(const WeightedSteinerGraph& wg, const Rat& gamma_value,
                            const CutSet& s1, const CutSet& s2) {
  const Graph& g = wg.graph();
  EdgeVector target = incidence_vector(g, s1);
  {
    EdgeVector other = incidence_vector(g, s2);
    for (size_t e = 0; e < target.size(); ++e) target[e] += other[e];
  }

  auto attempt = [&](UncrossVariant variant, NodeSet a,
                     NodeSet b) -> std::optional<UncrossResult> {
    if (a == 0 || b == 0) return std::nullopt;
    if ((a & wg.sg.terminals()) == 0 || (b & wg.sg.terminals()) == 0) return std::nullopt;
    const CutSet ca{a}, cb{b};
    EdgeVector sum = incidence_vector(g, ca);
    EdgeVector other = incidence_vector(g, cb);
    for (size_t e = 0; e < sum.size(); ++e) sum[e] += other[e];
    if (sum != target) return std::nullopt;
    if (cut_weight(wg, ca) != gamma_value || cut_weight(wg, cb) != gamma_value) {
      return std::nullopt;
    }
    return UncrossResult{variant, ca, cb};
  };

  const NodeSet m1 = s1.members, m2 = s2.members;
  if (auto r = attempt(UncrossVariant::cap_cup, m1 & m2, m1 | m2)) return *r;
  if (auto r = attempt(UncrossVariant::difference, m1 & ~m2, m2 & ~m1)) return *r;
  fail(errc::internal, "uncross: no replacement pair preserves the incidence sum");
}

}  // namespace

UncrossResult uncross(const WeightedSteinerGraph& wg, const CutSet& s1, const CutSet& s2,
                      const EnumGuards&) {
  const SteinerGraph& sg = wg.sg;
  for (const CutSet* s : {&s1, &s2}) {
    if (!is_steiner_cut(sg, *s)) fail(errc::invalid_input, "uncross: not a Steiner cut");
    if (canonical_cut(sg, *s) != *s) {
      fail(errc::invalid_input, "uncross: cut is not in canonical form");
    }
  }
  if (!sets_intersect(s1.members, s2.members)) {
    fail(errc::invalid_input, "uncross: the cuts do not intersect");
  }
  const Rat gamma_value = steiner_min_cut(wg).value;
  if (cut_weight(wg, s1) != gamma_value || cut_weight(wg, s2) != gamma_value) {
    fail(errc::invalid_input, "uncross: cut is not a root");
  }
  return uncross_roots(wg, gamma_value, s1, s2);
}

LaminarBasis laminar_root_basis(const WeightedSteinerGraph& wg, const EnumGuards& guards) {
  VerifyResult ver = verify_facet(wg, guards);
  if (!ver.facet()) {
    fail(errc::invalid_input, "laminar_root_basis: input is not facet-inducing (" + ver.reason +
                                  ")");
  }
  const Graph& g = wg.graph();
  const int m = g.edge_count();
  const Rat gamma_value = ver.gamma_value;

  const std::vector<CutSet> rootlist = roots(wg, guards);
  std::set<NodeSet> rootset;
  for (const CutSet& r : rootlist) rootset.insert(r.members);

  SetFamily family;
  RowSpan span(m);
  auto adopt = [&](NodeSet s) {
    if (!span.add(incidence_vector(g, CutSet{s}))) {
      fail(errc::internal, "laminar_root_basis: member dependent on the family");
    }
    family.push_back(s);
  };

  // Terminal singletons first: they are roots of every facet-inducing
  // weighting, are pairwise disjoint, and have independent incidence vectors.
  for (int t : wg.sg.terminal_list()) {
    if (t == wg.sg.base_terminal()) continue;
    NodeSet s = NodeSet{1} << t;
    if (rootset.count(s)) adopt(s);
  }

  // Grow a maximal laminar independent family greedily.
  for (const CutSet& r : rootlist) {
    if (static_cast<int>(family.size()) == m) break;
    if (std::find(family.begin(), family.end(), r.members) != family.end()) continue;
    bool laminar = true;
    for (NodeSet member : family) {
      if (sets_intersect(r.members, member)) {
        laminar = false;
        break;
      }
    }
    if (!laminar || span.contains(incidence_vector(g, r))) continue;
    adopt(r.members);
  }

  // Any remaining rank deficit is closed by uncrossing: pick the root outside
  // the span that crosses the family least, then uncross it against crossing
  // members. Each step keeps the candidate outside the span and strictly
  // shrinks its crossing count, so this terminates.
  while (static_cast<int>(family.size()) < m) {
    std::optional<CutSet> candidate;
    int crossings = std::numeric_limits<int>::max();
    for (const CutSet& r : rootlist) {
      if (span.contains(incidence_vector(g, r))) continue;
      int c = static_cast<int>(intersecting_members(r.members, family).size());
      if (c < crossings) {
        crossings = c;
        candidate = r;
      }
    }
    if (!candidate) fail(errc::internal, "laminar_root_basis: no independent root remains");

    CutSet s = *candidate;
    while (crossings > 0) {
      const int member_index = intersecting_members(s.members, family).front();
      UncrossResult ur =
          uncross_roots(wg, gamma_value, s, CutSet{family[static_cast<size_t>(member_index)]});
      std::optional<CutSet> next;
      int next_crossings = std::numeric_limits<int>::max();
      for (const CutSet& c : {ur.a, ur.b}) {
        if (span.contains(incidence_vector(g, c))) continue;
        int cc = static_cast<int>(intersecting_members(c.members, family).size());
        if (cc < next_crossings) {
          next_crossings = cc;
          next = c;
        }
      }
      if (!next || next_crossings >= crossings) {
        fail(errc::internal, "laminar_root_basis: uncrossing made no progress");
      }
      s = *next;
      crossings = next_crossings;
    }
    adopt(s.members);
  }

  std::vector<CutSet> members;
  members.reserve(family.size());
  for (NodeSet s : family) members.push_back(CutSet{s});
  std::sort(members.begin(), members.end(),
            [&](const CutSet& a, const CutSet& b) { return cutset_less(g, a, b); });
  return {std::move(members), gamma_value};
}

}  // namespace steinercut

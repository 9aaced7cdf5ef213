#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steinercut/cuts.hpp"
#include "steinercut/graph.hpp"

namespace steinercut {

// c x >= rhs over the edge space of a host graph (coeffs parallel to its edge
// list). Validity and facetness are always relative to an explicitly passed
// host, so the struct itself stays a plain value.
struct Inequality {
  EdgeVector coeffs;
  Rat rhs;

  bool operator==(const Inequality&) const = default;
};

int support_size(const Inequality& ineq);
// Joint minimum-integer-form scaling of coefficients and right-hand side.
Inequality normalized(const Inequality& ineq);
// Deterministic order used in every emitted list: (rhs, coefficient vector),
// both compared exactly.
bool inequality_less(const Inequality& a, const Inequality& b);

enum class FacetKind { tree, cactus, oracle };
std::string to_string(FacetKind kind);

struct FoundFacet {
  Inequality ineq;
  FacetKind kind;
};

struct FacetCertificate {
  Rat gamma_value;
  // |support| many linearly independent roots, canonical representatives in
  // cutset_less order.
  std::vector<CutSet> root_basis;
};

struct VerifyResult {
  std::optional<FacetCertificate> certificate;
  std::string reason;  // set when not a facet, e.g. "root rank 3 < 4"
  Rat gamma_value;

  bool facet() const { return certificate.has_value(); }
};

// Certifies whether c x >= gamma_c defines a facet of the cut dominant of the
// support graph: exactly |support| linearly independent minimum-weight Steiner
// cuts. Weights must already be in minimum integer form and gamma_c >= 1; both
// are preconditions, not outcomes.
VerifyResult verify_facet(const WeightedSteinerGraph& wg, const EnumGuards& guards = {});

// True iff the weights have full support and verify_facet certifies a facet.
// Accepts any positive rational weights (normalizes internally).
bool is_facet_inducing(const WeightedSteinerGraph& wg, const EnumGuards& guards = {});

// Restriction of wg to the support of its weights: the positive-weight edges,
// their endpoints, and the original terminals. Throws when a terminal loses
// every incident edge or the support is disconnected; such weightings cannot
// induce facets.
WeightedSteinerGraph support_restriction(const WeightedSteinerGraph& wg);

// The seven structural properties every facet-inducing weighting satisfies.
enum class StructuralItem {
  connected = 1,
  nonterminal_degree = 2,
  bounded = 3,
  root_sides_connected = 4,
  edge_in_no_root = 5,
  component_without_terminal = 6,
  weight_exceeds_gamma = 7,
};

struct StructuralViolation {
  StructuralItem item;
  std::string detail;
};

// Reports every violated property, sorted by item. Zero-weight edges trigger
// item 3 and all graph-shaped items are evaluated on the support restriction;
// when that restriction is not a valid Steiner graph, item 1 is reported and
// the root-dependent items are skipped.
std::vector<StructuralViolation> structural_check(const WeightedSteinerGraph& wg,
                                                  const EnumGuards& guards = {});

// No cut node and no nonterminal of degree two.
bool is_irreducible(const SteinerGraph& g);

struct SteinerDegreeResult {
  int degree;
  NodeSet terminals;  // first witness terminal set in deterministic order
};

// Smallest |T| for which ineq defines a facet of the Steiner cut dominant of
// (g, T). Requires ineq to be a facet of the cut dominant (T = V) first.
SteinerDegreeResult steiner_degree(const Graph& g, const Inequality& ineq,
                                   int max_nodes_guard = 10);

}  // namespace steinercut

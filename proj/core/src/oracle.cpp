#include "steinercut/oracle.hpp"

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "steinercut/cuts.hpp"
#include "steinercut/error.hpp"
#include "steinercut/linalg.hpp"

namespace steinercut {

namespace {

// Tight-row sets over the orthant rows followed by the processed cut rows.
// Sized for the relaxed guard ceiling (13 orthant rows + 256 cut rows).
constexpr size_t kMaxRows = 384;
using ZeroSet = std::bitset<kMaxRows>;

struct Ray {
  std::vector<Int> coords;  // length m+1; the last coordinate homogenizes
  ZeroSet zero;
};

Int dot(const std::vector<Int>& row, const std::vector<Int>& coords) {
  Int acc = 0;
  for (size_t i = 0; i < row.size(); ++i) acc += row[i] * coords[i];
  return acc;
}

void gcd_reduce(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1) {
    for (Int& x : v) x /= g;
  }
}

// Extreme rays of {y >= 0 : row . y >= 0 for all rows}, by double description:
// start from the orthant's unit rays and insert the rows one by one. Adjacency
// of a positive/negative ray pair is the standard combinatorial test: no third
// ray's tight set contains their common tight set.
std::vector<Ray> double_description(int dim, const std::vector<std::vector<Int>>& rows) {
  if (static_cast<size_t>(dim) + rows.size() > kMaxRows) {
    fail(errc::guard, "double description: row capacity exceeded");
  }
  std::vector<Ray> rays(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    rays[static_cast<size_t>(i)].coords.assign(static_cast<size_t>(dim), Int(0));
    rays[static_cast<size_t>(i)].coords[static_cast<size_t>(i)] = 1;
    for (int j = 0; j < dim; ++j) {
      if (j != i) rays[static_cast<size_t>(i)].zero.set(static_cast<size_t>(j));
    }
  }

  auto recompute_zero = [&](Ray& r, size_t processed) {
    r.zero.reset();
    for (int j = 0; j < dim; ++j) {
      if (r.coords[static_cast<size_t>(j)] == 0) r.zero.set(static_cast<size_t>(j));
    }
    for (size_t k = 0; k < processed; ++k) {
      if (dot(rows[k], r.coords) == 0) r.zero.set(static_cast<size_t>(dim) + k);
    }
  };

  for (size_t k = 0; k < rows.size(); ++k) {
    std::vector<Int> vals(rays.size());
    std::vector<size_t> pos, neg;
    for (size_t i = 0; i < rays.size(); ++i) {
      vals[i] = dot(rows[k], rays[i].coords);
      if (vals[i] > 0) pos.push_back(i);
      if (vals[i] < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (size_t i = 0; i < rays.size(); ++i) {
        if (vals[i] == 0) rays[i].zero.set(static_cast<size_t>(dim) + k);
      }
      continue;
    }
    std::vector<Ray> next;
    for (size_t i = 0; i < rays.size(); ++i) {
      if (vals[i] < 0) continue;
      next.push_back(rays[i]);
      if (vals[i] == 0) next.back().zero.set(static_cast<size_t>(dim) + k);
    }
    for (size_t p : pos) {
      for (size_t n : neg) {
        ZeroSet common = rays[p].zero & rays[n].zero;
        // An edge of the current cone needs at least dim-2 tight rows.
        if (common.count() + 2 < static_cast<size_t>(dim)) continue;
        bool adjacent = true;
        for (size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if ((common & ~rays[r].zero).none()) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh;
        fresh.coords.resize(static_cast<size_t>(dim));
        for (int j = 0; j < dim; ++j) {
          fresh.coords[static_cast<size_t>(j)] =
              vals[p] * rays[n].coords[static_cast<size_t>(j)] -
              vals[n] * rays[p].coords[static_cast<size_t>(j)];
        }
        gcd_reduce(fresh.coords);
        recompute_zero(fresh, k + 1);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }
  return rays;
}

std::vector<std::vector<Int>> sorted_cut_rows(const SteinerGraph& g,
                                              const std::vector<CutSet>& cuts) {
  const int m = g.graph().edge_count();
  std::vector<std::vector<Int>> rows;
  rows.reserve(cuts.size());
  for (const CutSet& s : cuts) {
    std::vector<Int> row(static_cast<size_t>(m) + 1, Int(0));
    for (int e : delta(g.graph(), s)) row[static_cast<size_t>(e)] = 1;
    row[static_cast<size_t>(m)] = -1;
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [m](const auto& a, const auto& b) {
    int ca = 0, cb = 0;
    for (int e = 0; e < m; ++e) {
      ca += a[static_cast<size_t>(e)] != 0 ? 1 : 0;
      cb += b[static_cast<size_t>(e)] != 0 ? 1 : 0;
    }
    if (ca != cb) return ca < cb;
    return a < b;
  });
  return rows;
}

std::vector<FoundFacet> finish_facets(std::vector<FoundFacet> out) {
  std::sort(out.begin(), out.end(), [](const FoundFacet& a, const FoundFacet& b) {
    return inequality_less(a.ineq, b.ineq);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const FoundFacet& a, const FoundFacet& b) { return a.ineq == b.ineq; }),
            out.end());
  return out;
}

}  // namespace

std::vector<FoundFacet> oracle_facets(const SteinerGraph& g, const OracleGuards& guards) {
  const int m = g.graph().edge_count();
  if (m > guards.max_edges) {
    fail(errc::guard, "oracle: " + std::to_string(m) + " edges exceed the guard of " +
                                 std::to_string(guards.max_edges));
  }
  std::vector<CutSet> cuts = enumerate_steiner_cuts(g);
  if (static_cast<int>(cuts.size()) > guards.max_cuts) {
    fail(errc::guard, "oracle: " + std::to_string(cuts.size()) +
                                 " Steiner cuts exceed the guard of " +
                                 std::to_string(guards.max_cuts));
  }

  std::vector<Ray> rays = double_description(m + 1, sorted_cut_rows(g, cuts));
  std::vector<FoundFacet> out;
  for (const Ray& ray : rays) {
    const Int& t = ray.coords[static_cast<size_t>(m)];
    if (t == 0) {
      // Recession directions of the blocker: exactly the coordinate rays.
      int support = 0;
      for (int e = 0; e < m; ++e) {
        if (ray.coords[static_cast<size_t>(e)] != 0) ++support;
      }
      if (support != 1) {
        fail(errc::internal, "oracle: non-coordinate recession ray");
      }
      continue;
    }
    EdgeVector coeffs(static_cast<size_t>(m));
    for (int e = 0; e < m; ++e) coeffs[static_cast<size_t>(e)] = Rat(ray.coords[static_cast<size_t>(e)]);
    auto [mincoeffs, rhs] = minimum_integer_form(coeffs, Rat(t));
    out.push_back(FoundFacet{Inequality{std::move(mincoeffs), rhs}, FacetKind::oracle});
  }
  return finish_facets(std::move(out));
}

std::vector<FoundFacet> oracle_facets_naive(const SteinerGraph& g, long long subset_budget) {
  const int m = g.graph().edge_count();
  std::vector<CutSet> cuts = enumerate_steiner_cuts(g);

  // Constraint pool: every cut row (rhs 1) and every nonnegativity row (rhs 0).
  std::vector<std::pair<RatRow, Rat>> pool;
  for (const CutSet& s : cuts) {
    RatRow row(static_cast<size_t>(m), Rat(0));
    for (int e : delta(g.graph(), s)) row[static_cast<size_t>(e)] = 1;
    pool.emplace_back(std::move(row), Rat(1));
  }
  for (int e = 0; e < m; ++e) {
    RatRow row(static_cast<size_t>(m), Rat(0));
    row[static_cast<size_t>(e)] = 1;
    pool.emplace_back(std::move(row), Rat(0));
  }

  const int k = static_cast<int>(pool.size());
  unsigned long long count = 1;
  const int pick = std::min(m, k - m);
  for (int i = 0; i < pick; ++i) {
    count = count * static_cast<unsigned long long>(k - i) / static_cast<unsigned long long>(i + 1);
    if (count > static_cast<unsigned long long>(subset_budget)) {
      fail(errc::guard, "oracle_facets_naive: candidate subsets exceed the budget of " +
                                   std::to_string(subset_budget));
    }
  }

  std::vector<FoundFacet> out;
  std::vector<int> idx(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    RatMatrix a(m, m);
    RatRow b(static_cast<size_t>(m));
    for (int r = 0; r < m; ++r) {
      const auto& row = pool[static_cast<size_t>(idx[static_cast<size_t>(r)])];
      for (int c = 0; c < m; ++c) a.at(r, c) = row.first[static_cast<size_t>(c)];
      b[static_cast<size_t>(r)] = row.second;
    }
    SolveOutcome sol = solve_square(a, b);
    if (!sol.singular) {
      bool feasible = true;
      for (const Rat& x : sol.solution) {
        if (x < 0) {
          feasible = false;
          break;
        }
      }
      for (size_t c = 0; feasible && c < cuts.size(); ++c) {
        Rat lhs = 0;
        for (int e = 0; e < m; ++e) {
          lhs += pool[c].first[static_cast<size_t>(e)] * sol.solution[static_cast<size_t>(e)];
        }
        if (lhs < 1) feasible = false;
      }
      if (feasible) {
        auto [coeffs, rhs] = minimum_integer_form(sol.solution, Rat(1));
        out.push_back(FoundFacet{Inequality{std::move(coeffs), rhs}, FacetKind::oracle});
      }
    }
    // Next m-subset of the pool in lexicographic order.
    int i = m - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == k - m + i) --i;
    if (i < 0) break;
    idx[static_cast<size_t>(i)] += 1;
    for (int j = i + 1; j < m; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return finish_facets(std::move(out));
}

ValidationResult validate_inequality(const SteinerGraph& g, const Inequality& ineq,
                                     const EnumGuards& guards) {
  if (static_cast<int>(ineq.coeffs.size()) != g.graph().edge_count()) {
    fail(errc::invalid_input, "validate: expected " +
                                         std::to_string(g.graph().edge_count()) +
                                         " coefficients, got " +
                                         std::to_string(ineq.coeffs.size()));
  }
  for (const CutSet& s : enumerate_steiner_cuts(g, guards)) {
    Rat lhs = 0;
    for (int e : delta(g.graph(), s)) lhs += ineq.coeffs[static_cast<size_t>(e)];
    if (lhs < ineq.rhs) return ValidationResult{false, s};
  }
  return ValidationResult{true, std::nullopt};
}

namespace {

struct PatternEdge {
  int a, b, minlen;
};

struct Pattern {
  int branches;
  std::vector<PatternEdge> edges;
};

// Prism: two triangles joined by a perfect matching.
const Pattern& prism_pattern() {
  static const Pattern p{6,
                         {{0, 1, 1},
                          {0, 2, 1},
                          {1, 2, 1},
                          {3, 4, 1},
                          {3, 5, 1},
                          {4, 5, 1},
                          {0, 3, 1},
                          {1, 4, 1},
                          {2, 5, 1}}};
  return p;
}

// Pyramid: triangle 0,1,2 plus apex 3, each apex connection passing through a
// subdivision node, hence minimum length two.
const Pattern& pyramid_pattern() {
  static const Pattern p{4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {0, 3, 2}, {1, 3, 2}, {2, 3, 2}}};
  return p;
}

class TopoEmbedder {
 public:
  TopoEmbedder(const Graph& g, const Pattern& pat) : g_(g), pat_(pat) {
    used_.assign(static_cast<size_t>(g.node_count()), 0);
    image_.assign(static_cast<size_t>(pat.branches), -1);
    for (int v = 0; v < g.node_count(); ++v) {
      if (g.degree(v) >= 3) candidates_.push_back(v);
    }
  }

  bool found() {
    if (static_cast<int>(candidates_.size()) < pat_.branches) return false;
    int need = pat_.branches;
    for (const PatternEdge& e : pat_.edges) need += e.minlen - 1;
    if (g_.node_count() < need || g_.edge_count() < static_cast<int>(pat_.edges.size())) {
      return false;
    }
    return place(0);
  }

 private:
  bool place(int b) {
    if (b == pat_.branches) return route(0);
    for (int v : candidates_) {
      if (used_[static_cast<size_t>(v)]) continue;
      used_[static_cast<size_t>(v)] = 1;
      image_[static_cast<size_t>(b)] = v;
      if (place(b + 1)) return true;
      used_[static_cast<size_t>(v)] = 0;
    }
    return false;
  }

  bool route(int ei) {
    if (ei == static_cast<int>(pat_.edges.size())) return true;
    const PatternEdge& e = pat_.edges[static_cast<size_t>(ei)];
    return extend(image_[static_cast<size_t>(e.a)], image_[static_cast<size_t>(e.b)], 0,
                  e.minlen, ei);
  }

  // Grows a path towards `target`; on arrival recurses into the next edge so
  // the internal nodes stay reserved while the rest of the pattern routes.
  bool extend(int cur, int target, int len, int minlen, int ei) {
    for (int w : g_.neighbors(cur)) {
      if (w == target) {
        if (len + 1 >= minlen && route(ei + 1)) return true;
        continue;
      }
      if (used_[static_cast<size_t>(w)]) continue;
      used_[static_cast<size_t>(w)] = 1;
      if (extend(w, target, len + 1, minlen, ei)) return true;
      used_[static_cast<size_t>(w)] = 0;
    }
    return false;
  }

  const Graph& g_;
  const Pattern& pat_;
  std::vector<int> candidates_;
  std::vector<int> image_;
  std::vector<char> used_;
};

}  // namespace

bool has_prism_or_pyramid_minor(const Graph& g, int max_nodes_guard) {
  if (g.node_count() > max_nodes_guard) {
    fail(errc::guard, "minor test: " + std::to_string(g.node_count()) +
                                 " nodes exceed the guard of " + std::to_string(max_nodes_guard));
  }
  // Both patterns are cubic, so minors and topological minors coincide.
  return TopoEmbedder(g, prism_pattern()).found() ||
         TopoEmbedder(g, pyramid_pattern()).found();
}

}  // namespace steinercut

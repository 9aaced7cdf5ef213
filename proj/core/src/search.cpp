#include "steinercut/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "steinercut/error.hpp"
#include "steinercut/facets.hpp"
#include "steinercut/oracle.hpp"

namespace steinercut {

namespace {

constexpr int kIsoMaxNodes = 12;

using Mask = uint16_t;

// Compact adjacency for generation work; public Graph objects are built only
// for the survivors.
struct AdjMatrix {
  int n = 0;
  std::array<Mask, kIsoMaxNodes> adj{};

  bool has(int u, int v) const { return (adj[static_cast<size_t>(u)] >> v) & 1; }
  void add(int u, int v) {
    adj[static_cast<size_t>(u)] |= static_cast<Mask>(Mask{1} << v);
    adj[static_cast<size_t>(v)] |= static_cast<Mask>(Mask{1} << u);
  }
  int degree(int v) const { return std::popcount(adj[static_cast<size_t>(v)]); }
};

bool connected_over(const AdjMatrix& g, Mask mask) {
  if (mask == 0) return true;
  Mask seen = static_cast<Mask>(mask & static_cast<Mask>(-mask));  // lowest member
  for (;;) {
    Mask next = seen;
    for (int v = 0; v < g.n; ++v) {
      if ((seen >> v) & 1) next |= static_cast<Mask>(g.adj[static_cast<size_t>(v)] & mask);
    }
    if (next == seen) break;
    seen = next;
  }
  return seen == mask;
}

Mask full_mask(int n) { return static_cast<Mask>((Mask{1} << n) - 1); }

bool is_two_connected(const AdjMatrix& g) {
  Mask all = full_mask(g.n);
  if (g.n < 3 || !connected_over(g, all)) return false;
  for (int v = 0; v < g.n; ++v) {
    if (!connected_over(g, static_cast<Mask>(all & ~(Mask{1} << v)))) return false;
  }
  return true;
}

// One round of color refinement: new color = rank of (color, sorted neighbor
// colors). Iterated to a fixed point; the result is isomorphism-invariant.
std::vector<int> refine_colors(const AdjMatrix& g, std::vector<int> color) {
  for (;;) {
    std::vector<std::vector<int>> sig(static_cast<size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
      std::vector<int>& s = sig[static_cast<size_t>(v)];
      s.push_back(color[static_cast<size_t>(v)]);
      for (int w = 0; w < g.n; ++w) {
        if (g.has(v, w)) s.push_back(color[static_cast<size_t>(w)]);
      }
      std::sort(s.begin() + 1, s.end());
    }
    std::vector<std::vector<int>> unique_sigs = sig;
    std::sort(unique_sigs.begin(), unique_sigs.end());
    unique_sigs.erase(std::unique(unique_sigs.begin(), unique_sigs.end()), unique_sigs.end());
    std::vector<int> next(static_cast<size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
      next[static_cast<size_t>(v)] = static_cast<int>(
          std::lower_bound(unique_sigs.begin(), unique_sigs.end(), sig[static_cast<size_t>(v)]) -
          unique_sigs.begin());
    }
    if (next == color) return color;
    color = std::move(next);
  }
}

std::vector<std::vector<int>> color_classes(const std::vector<int>& color) {
  int top = *std::max_element(color.begin(), color.end());
  std::vector<std::vector<int>> classes(static_cast<size_t>(top) + 1);
  for (int v = 0; v < static_cast<int>(color.size()); ++v) {
    classes[static_cast<size_t>(color[static_cast<size_t>(v)])].push_back(v);
  }
  return classes;
}

struct Encoding {
  std::array<uint64_t, 2> bits{};

  auto operator<=>(const Encoding&) const = default;
};

// Upper-triangle adjacency bits of the graph relabeled by perm (position ->
// node).
Encoding encode(const AdjMatrix& g, const std::vector<int>& perm) {
  Encoding e;
  int k = 0;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j, ++k) {
      if (g.has(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)])) {
        e.bits[static_cast<size_t>(k) / 64] |= uint64_t{1} << (k % 64);
      }
    }
  }
  return e;
}

// Applies fn to every permutation that keeps each color class intact
// (position -> node, classes laid out in rank order).
template <typename F>
void for_each_class_perm(std::vector<std::vector<int>> classes, F&& fn) {
  for (std::vector<int>& c : classes) std::sort(c.begin(), c.end());
  std::vector<int> perm;
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == classes.size()) {
      perm.clear();
      for (const std::vector<int>& c : classes) perm.insert(perm.end(), c.begin(), c.end());
      fn(perm);
      return;
    }
    std::vector<int>& c = classes[k];
    std::sort(c.begin(), c.end());
    do {
      self(self, k + 1);
    } while (std::next_permutation(c.begin(), c.end()));
  };
  rec(rec, 0);
}

struct CanonicalForm {
  AdjMatrix graph;
  Encoding encoding;
};

CanonicalForm canonicalize(const AdjMatrix& g) {
  std::vector<int> init(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) init[static_cast<size_t>(v)] = g.degree(v);
  std::vector<int> color = refine_colors(g, std::move(init));

  std::optional<Encoding> best;
  std::vector<int> best_perm;
  for_each_class_perm(color_classes(color), [&](const std::vector<int>& perm) {
    Encoding e = encode(g, perm);
    if (!best || e < *best) {
      best = e;
      best_perm = perm;
    }
  });

  CanonicalForm out;
  out.graph.n = g.n;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      if (g.has(best_perm[static_cast<size_t>(i)], best_perm[static_cast<size_t>(j)])) {
        out.graph.add(i, j);
      }
    }
  }
  out.encoding = *best;
  return out;
}

// Automorphisms of g as position -> node maps; g is expected to be in
// canonical labeling already.
std::vector<std::vector<int>> automorphisms(const AdjMatrix& g) {
  std::vector<int> init(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) init[static_cast<size_t>(v)] = g.degree(v);
  std::vector<int> color = refine_colors(g, std::move(init));

  std::vector<int> identity(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) identity[static_cast<size_t>(v)] = v;
  Encoding self = encode(g, identity);

  std::vector<std::vector<int>> autos;
  for_each_class_perm(color_classes(color), [&](const std::vector<int>& perm) {
    if (encode(g, perm) == self) autos.push_back(perm);
  });
  return autos;
}

// All graphs with the prescribed per-node degrees (non-increasing), emitted
// through fn. Pairs are decided in lexicographic order with exact-degree
// checks at each row boundary.
template <typename F>
void fill_degrees(const std::vector<int>& want, F&& fn) {
  const int n = static_cast<int>(want.size());
  AdjMatrix g;
  g.n = n;
  std::vector<int> deg(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int j) -> void {
    if (j == n) {
      if (deg[static_cast<size_t>(i)] != want[static_cast<size_t>(i)]) return;
      if (i + 2 >= n) {
        if (n < 2 || deg[static_cast<size_t>(n) - 1] == want[static_cast<size_t>(n) - 1]) fn(g);
        return;
      }
      self(self, i + 1, i + 2);
      return;
    }
    int missing = want[static_cast<size_t>(i)] - deg[static_cast<size_t>(i)];
    // Skipping (i, j) leaves n - 1 - j later partners for i.
    if (missing <= n - 1 - j) self(self, i, j + 1);
    if (missing > 0 && deg[static_cast<size_t>(j)] < want[static_cast<size_t>(j)]) {
      g.add(i, j);
      ++deg[static_cast<size_t>(i)];
      ++deg[static_cast<size_t>(j)];
      self(self, i, j + 1);
      --deg[static_cast<size_t>(i)];
      --deg[static_cast<size_t>(j)];
      g.adj[static_cast<size_t>(i)] &= static_cast<Mask>(~(Mask{1} << j));
      g.adj[static_cast<size_t>(j)] &= static_cast<Mask>(~(Mask{1} << i));
    }
  };
  if (n >= 2) rec(rec, 0, 1);
}

// Non-increasing degree sequences with the given sum, minimum entry two, and
// at least min_heavy entries of three or more.
template <typename F>
void degree_multisets(int n, int sum, int max_deg, int min_heavy, F&& fn) {
  std::vector<int> seq;
  auto rec = [&](auto&& self, int left, int prev, int heavy) -> void {
    int k = n - static_cast<int>(seq.size());
    if (k == 0) {
      if (left == 0 && heavy >= min_heavy) fn(seq);
      return;
    }
    // Remaining entries lie in [2, prev].
    if (left < 2 * k || left > prev * k) return;
    for (int d = std::min(prev, left - 2 * (k - 1)); d >= 2; --d) {
      seq.push_back(d);
      self(self, left - d, d, heavy + (d >= 3 ? 1 : 0));
      seq.pop_back();
    }
  };
  rec(rec, sum, max_deg, 0);
}

Graph to_graph(const AdjMatrix& g) {
  std::vector<std::string> names;
  for (int v = 0; v < g.n; ++v) names.push_back(std::to_string(v + 1));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      if (g.has(i, j)) edges.emplace_back(names[static_cast<size_t>(i)],
                                          names[static_cast<size_t>(j)]);
    }
  }
  return Graph(std::move(names), edges);
}

// Terminal masks (one per automorphism orbit) whose complement consists of
// degree >= 3 nodes only.
std::vector<Mask> terminal_orbits(const AdjMatrix& g, int tau,
                                  const std::vector<std::vector<int>>& autos) {
  std::vector<int> heavy;
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) >= 3) heavy.push_back(v);
  }
  const int drop = g.n - tau;
  if (drop < 0 || drop > static_cast<int>(heavy.size())) return {};

  std::vector<Mask> kept;
  std::vector<int> pick(static_cast<size_t>(drop));
  for (int i = 0; i < drop; ++i) pick[static_cast<size_t>(i)] = i;
  const int h = static_cast<int>(heavy.size());
  for (;;) {
    Mask terminals = full_mask(g.n);
    for (int i : pick) terminals &= static_cast<Mask>(~(Mask{1} << heavy[static_cast<size_t>(i)]));
    bool minimal = true;
    for (const std::vector<int>& p : autos) {
      Mask image = 0;
      for (int pos = 0; pos < g.n; ++pos) {
        if ((terminals >> p[static_cast<size_t>(pos)]) & 1) {
          image |= static_cast<Mask>(Mask{1} << pos);
        }
      }
      if (image < terminals) {
        minimal = false;
        break;
      }
    }
    if (minimal) kept.push_back(terminals);

    if (drop == 0) break;
    int i = drop - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == h - drop + i) --i;
    if (i < 0) break;
    pick[static_cast<size_t>(i)] += 1;
    for (int j = i + 1; j < drop; ++j) {
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return kept;
}

}  // namespace

std::vector<CatalogueEntry> search_irreducible(int tau, int max_nodes) {
  if (tau < 2) fail(errc::invalid_input, "search: tau must be at least 2");
  if (tau == 2) {
    if (max_nodes < 2) return {};
    SteinerGraph edge(Graph({"1", "2"}, {{"1", "2"}}), {"1", "2"});
    return {CatalogueEntry{std::move(edge), {Inequality{{Rat(1)}, Rat(1)}}}};
  }
  const int cap = std::min(3 * tau - 6, 12);
  if (max_nodes > cap) {
    fail(errc::invalid_input, "search: max_nodes " + std::to_string(max_nodes) +
                                  " exceeds the admissible bound " + std::to_string(cap));
  }

  const OracleGuards relaxed{12, 256};
  auto edge_bounds = [tau](int n) {
    // Degree sums force 2|E| >= 2 tau + 3 (n - tau); the structural bound
    // caps |E| at n + tau - 3.
    int lo = std::max(n, (3 * n - tau + 1) / 2);
    int hi = n + tau - 3;
    return std::pair<int, int>(lo, hi);
  };
  for (int n = tau; n <= max_nodes; ++n) {
    auto [lo, hi] = edge_bounds(n);
    if (lo <= hi && hi > relaxed.max_edges) {
      fail(errc::guard, "search: graphs with " + std::to_string(n) + " nodes need up to " +
                            std::to_string(hi) + " edges, above the oracle guard of " +
                            std::to_string(relaxed.max_edges));
    }
  }

  struct Keyed {
    int n;
    int m;
    Encoding encoding;
    Mask terminals;
    CatalogueEntry entry;
  };
  std::vector<Keyed> found;

  for (int n = tau; n <= max_nodes; ++n) {
    auto [lo, hi] = edge_bounds(n);
    for (int m = lo; m <= hi; ++m) {
      std::set<Encoding> seen;
      std::vector<CanonicalForm> hosts;
      degree_multisets(n, 2 * m, n - 1, n - tau, [&](const std::vector<int>& want) {
        fill_degrees(want, [&](const AdjMatrix& g) {
          if (!is_two_connected(g)) return;
          CanonicalForm canon = canonicalize(g);
          if (seen.insert(canon.encoding).second) hosts.push_back(std::move(canon));
        });
      });

      for (const CanonicalForm& form : hosts) {
        const AdjMatrix& host = form.graph;
        const Encoding& enc = form.encoding;
        std::vector<std::vector<int>> autos = automorphisms(host);
        Graph graph = to_graph(host);
        for (Mask terminals : terminal_orbits(host, tau, autos)) {
          SteinerGraph sg(graph, static_cast<NodeSet>(terminals));
          std::vector<Inequality> dense;
          for (const FoundFacet& f : oracle_facets(sg, relaxed)) {
            if (support_size(f.ineq) == m) dense.push_back(f.ineq);
          }
          if (!dense.empty()) {
            found.push_back(Keyed{n, m, enc, terminals, CatalogueEntry{sg, std::move(dense)}});
          }
        }
      }
    }
  }

  std::sort(found.begin(), found.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.n, a.m, a.encoding, a.terminals) <
           std::tie(b.n, b.m, b.encoding, b.terminals);
  });
  std::vector<CatalogueEntry> out;
  out.reserve(found.size());
  for (Keyed& k : found) out.push_back(std::move(k.entry));
  return out;
}

namespace {

// Backtracking matcher for terminal-preserving isomorphism, optionally
// constrained to matching edge weights exactly.
struct IsoMatcher {
  const SteinerGraph& a;
  const SteinerGraph& b;
  const EdgeVector* wa = nullptr;
  const EdgeVector* wb = nullptr;

  std::vector<int> map;
  std::vector<char> used;
  std::vector<int> order;

  bool weight_ok(int au, int av, int bu, int bv) const {
    if (!wa) return true;
    std::optional<int> ea = a.graph().find_edge(au, av);
    std::optional<int> eb = b.graph().find_edge(bu, bv);
    return (*wa)[static_cast<size_t>(*ea)] == (*wb)[static_cast<size_t>(*eb)];
  }

  bool extend(size_t k) {
    if (k == order.size()) return true;
    int v = order[k];
    const Graph& ga = a.graph();
    const Graph& gb = b.graph();
    for (int w = 0; w < gb.node_count(); ++w) {
      if (used[static_cast<size_t>(w)]) continue;
      if (a.is_terminal(v) != b.is_terminal(w)) continue;
      if (ga.degree(v) != gb.degree(w)) continue;
      bool ok = true;
      for (size_t prev = 0; prev < k && ok; ++prev) {
        int u = order[prev];
        int mapped = map[static_cast<size_t>(u)];
        bool adj_a = ga.adjacent(u, v);
        if (adj_a != gb.adjacent(mapped, w)) {
          ok = false;
        } else if (adj_a && !weight_ok(u, v, mapped, w)) {
          ok = false;
        }
      }
      if (!ok) continue;
      map[static_cast<size_t>(v)] = w;
      used[static_cast<size_t>(w)] = 1;
      if (extend(k + 1)) return true;
      used[static_cast<size_t>(w)] = 0;
    }
    return false;
  }

  std::optional<std::vector<int>> run() {
    const Graph& ga = a.graph();
    const Graph& gb = b.graph();
    if (ga.node_count() != gb.node_count() || ga.edge_count() != gb.edge_count() ||
        a.terminal_count() != b.terminal_count()) {
      return std::nullopt;
    }
    map.assign(static_cast<size_t>(ga.node_count()), -1);
    used.assign(static_cast<size_t>(gb.node_count()), 0);
    order.resize(static_cast<size_t>(ga.node_count()));
    for (int v = 0; v < ga.node_count(); ++v) order[static_cast<size_t>(v)] = v;
    // Most-constrained first: high degree, terminals breaking ties.
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      if (ga.degree(x) != ga.degree(y)) return ga.degree(x) > ga.degree(y);
      if (a.is_terminal(x) != a.is_terminal(y)) return a.is_terminal(x);
      return x < y;
    });
    if (extend(0)) return map;
    return std::nullopt;
  }
};

void check_iso_guard(const SteinerGraph& a, const SteinerGraph& b) {
  int n = std::max(a.graph().node_count(), b.graph().node_count());
  if (n > kIsoMaxNodes) {
    fail(errc::guard, "isomorphism: " + std::to_string(n) + " nodes exceed the guard of " +
                          std::to_string(kIsoMaxNodes));
  }
}

}  // namespace

bool steiner_isomorphic(const SteinerGraph& a, const SteinerGraph& b) {
  return find_steiner_isomorphism(a, b).has_value();
}

std::optional<std::vector<int>> find_steiner_isomorphism(const SteinerGraph& a,
                                                         const SteinerGraph& b) {
  check_iso_guard(a, b);
  IsoMatcher matcher{a, b};
  return matcher.run();
}

bool weighted_steiner_isomorphic(const WeightedSteinerGraph& a, const WeightedSteinerGraph& b) {
  check_iso_guard(a.sg, b.sg);
  IsoMatcher matcher{a.sg, b.sg, &a.weights, &b.weights};
  return matcher.run().has_value();
}

std::vector<Graph> enumerate_connected_graphs(int n, int min_edges, int max_edges) {
  if (n < 1) fail(errc::invalid_input, "enumerate: node count must be positive");
  if (n > 10) {
    fail(errc::guard, "enumerate: " + std::to_string(n) + " nodes exceed the guard of 10");
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const int p = static_cast<int>(pairs.size());
  const int lo = std::max(min_edges, n - 1);
  const int hi = std::min(max_edges, p);

  constexpr long long kBudget = 20'000'000;
  long long total = 0;
  for (int m = std::max(lo, 0); m <= hi; ++m) {
    long long count = 1;
    for (int i = 0; i < std::min(m, p - m); ++i) {
      count = count * (p - i) / (i + 1);
      if (count > kBudget) break;
    }
    total += count;
    if (total > kBudget) {
      fail(errc::guard, "enumerate: candidate edge sets exceed the guard budget");
    }
  }

  std::set<Encoding> seen;
  std::vector<std::pair<std::pair<int, Encoding>, AdjMatrix>> found;
  for (int m = std::max(lo, 0); m <= hi; ++m) {
    std::vector<int> idx(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<size_t>(i)] = i;
    for (;;) {
      AdjMatrix g;
      g.n = n;
      for (int i : idx) {
        g.add(pairs[static_cast<size_t>(i)].first, pairs[static_cast<size_t>(i)].second);
      }
      if (connected_over(g, full_mask(n))) {
        CanonicalForm canon = canonicalize(g);
        if (seen.insert(canon.encoding).second) {
          found.emplace_back(std::pair<int, Encoding>(m, canon.encoding), canon.graph);
        }
      }
      if (m == 0) break;
      int i = m - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == p - m + i) --i;
      if (i < 0) break;
      idx[static_cast<size_t>(i)] += 1;
      for (int j = i + 1; j < m; ++j) {
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(found.size());
  for (const auto& [key, g] : found) out.push_back(to_graph(g));
  return out;
}

}  // namespace steinercut

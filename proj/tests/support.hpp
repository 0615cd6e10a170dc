#pragma once

// Random inputs and brute-force oracles shared by the test binaries. Nothing
// here calls into the library's algorithms; the oracles work from definitions.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <climits>
#include <functional>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "twodist/bipartite.hpp"
#include "twodist/graph.hpp"
#include "twodist/rational.hpp"

namespace testing {

using twodist::Edge;
using twodist::Graph;
using twodist::Rational;
using twodist::Vertex;

inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

// Random graph with some 2-subdivided edges, so degree-2 vertices and links
// are common.
inline Graph random_subdivided(std::size_t base_n, double p, std::size_t max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Graph base = random_graph(base_n, p, seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Edge> edges;
  std::size_t n = base_n;
  for (auto [u, v] : base.edges()) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    if (n + len > max_n) {
      edges.emplace_back(u, v);
      continue;
    }
    Vertex prev = u;
    for (std::size_t i = 0; i < len; ++i) {
      edges.emplace_back(prev, n);
      prev = n++;
    }
    edges.emplace_back(prev, v);
  }
  return Graph(n, edges);
}

inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex s) {
  std::vector<std::size_t> dist(g.vertex_count(), SIZE_MAX);
  std::queue<Vertex> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v))
      if (dist[w] == SIZE_MAX) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

inline std::set<Edge> square_pairs(const Graph& g) {
  std::set<Edge> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const auto dist = bfs_distances(g, u);
    for (Vertex v = u + 1; v < g.vertex_count(); ++v)
      if (dist[v] <= 2) out.emplace(u, v);
  }
  return out;
}

inline std::size_t edges_within(const Graph& g, std::uint32_t mask) {
  std::size_t e = 0;
  for (auto [u, v] : g.edges())
    if ((mask >> u & 1) && (mask >> v & 1)) ++e;
  return e;
}

inline Rational mad_by_subsets(const Graph& g) {
  Rational best(0);
  const std::size_t n = g.vertex_count();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const Rational d(2 * static_cast<long long>(edges_within(g, mask)), std::popcount(mask));
    if (d > best) best = d;
  }
  return best;
}

// Conflict pairs for two-distance (adjacent or common neighbor) or injective
// (common neighbor only) coloring.
inline std::vector<std::vector<char>> conflict_matrix(const Graph& g, bool injective) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
  for (Vertex w = 0; w < n; ++w) {
    const auto nb = g.neighbors(w);
    for (Vertex a : nb)
      for (Vertex b : nb)
        if (a != b) m[a][b] = 1;
    if (!injective)
      for (Vertex a : nb) m[w][a] = m[a][w] = 1;
  }
  return m;
}

// Smallest c such that the conflict graph is c-colorable, by plain
// backtracking over vertices in id order.
inline std::size_t chromatic_by_backtracking(const Graph& g, bool injective) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  const auto m = conflict_matrix(g, injective);
  std::vector<int> color(n, -1);
  for (std::size_t c = 1;; ++c) {
    std::function<bool(Vertex)> go = [&](Vertex v) {
      if (v == n) return true;
      for (int col = 0; col < static_cast<int>(c); ++col) {
        bool ok = true;
        for (Vertex u = 0; u < v && ok; ++u)
          if (m[v][u] && color[u] == col) ok = false;
        if (!ok) continue;
        color[v] = col;
        if (go(v + 1)) return true;
      }
      color[v] = -1;
      return false;
    };
    if (go(0)) return c;
  }
}

struct RawLink {
  Vertex x, y;
  std::vector<Vertex> inner;
  auto operator<=>(const RawLink&) const = default;
};

// All p-links by enumerating sequences of p distinct degree-2 vertices that
// form a path, oriented as the library documents.
inline std::set<RawLink> p_links_by_enumeration(const Graph& g, std::size_t p) {
  std::set<RawLink> out;
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> seq;
  std::function<void()> extend = [&]() {
    if (seq.size() == p) {
      auto outer = [&](Vertex end, std::optional<Vertex> inward) {
        for (Vertex w : g.neighbors(end))
          if (!inward || w != *inward) return w;
        return end;
      };
      const Vertex x = outer(seq.front(), p > 1 ? std::optional<Vertex>(seq[1]) : std::nullopt);
      Vertex y;
      if (p == 1) {
        const auto nb = g.neighbors(seq[0]);
        y = nb[0] == x ? nb[1] : nb[0];
      } else {
        y = outer(seq.back(), seq[p - 2]);
      }
      // x and y must lie off the inner path
      if (std::find(seq.begin(), seq.end(), x) != seq.end() || std::find(seq.begin(), seq.end(), y) != seq.end())
        return;
      RawLink link{x, y, seq};
      if (p == 1 && link.x > link.y) std::swap(link.x, link.y);
      if (p >= 2 && link.inner.front() > link.inner.back()) {
        std::reverse(link.inner.begin(), link.inner.end());
        std::swap(link.x, link.y);
      }
      out.insert(link);
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) != 2 || std::find(seq.begin(), seq.end(), v) != seq.end()) continue;
      if (!seq.empty() && !g.adjacent(seq.back(), v)) continue;
      seq.push_back(v);
      extend();
      seq.pop_back();
    }
  };
  extend();
  return out;
}

// Least fixpoint of the V1 membership rule as the intersection of all closed
// sets (sets S with rule(S) contained in S), checking the rule by searching
// for an explicit labeling v_1, ..., v_{d-1}.
inline bool v1_rule_by_labeling(const Graph& g, Vertex u, const std::vector<char>& current, long long m_minus_1) {
  const std::size_t d = g.degree(u);
  if (d < 2 || static_cast<long long>(d) > m_minus_1) return false;
  std::vector<Vertex> deg2;
  for (Vertex v : g.neighbors(u))
    if (g.degree(v) == 2) deg2.push_back(v);
  auto other = [&](Vertex v) { return g.other_neighbor(v, u); };
  for (Vertex first : deg2) {
    if (static_cast<long long>(g.degree(other(first))) > m_minus_1) continue;
    std::size_t rest = 0;
    for (Vertex v : deg2)
      if (v != first && current[other(v)]) ++rest;
    if (rest + 2 >= d) return true;
  }
  return false;
}

inline std::vector<char> least_v1_by_closed_sets(const Graph& g, long long m_minus_1) {
  const std::size_t n = g.vertex_count();
  std::vector<char> meet(n, 1);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<char> s(n);
    for (Vertex v = 0; v < n; ++v) s[v] = mask >> v & 1;
    bool closed = true;
    for (Vertex v = 0; v < n && closed; ++v)
      if (!s[v] && v1_rule_by_labeling(g, v, s, m_minus_1)) closed = false;
    if (!closed) continue;
    for (Vertex v = 0; v < n; ++v) meet[v] = meet[v] && s[v];
  }
  return meet;
}

inline twodist::BipartiteMultigraph random_bipartite(std::size_t max_side, std::size_t max_mult, std::uint64_t seed,
                                                     double density = 0.5) {
  std::mt19937_64 rng(seed);
  twodist::BipartiteMultigraph d;
  d.a_count = std::uniform_int_distribution<std::size_t>(1, max_side)(rng);
  d.b_count = std::uniform_int_distribution<std::size_t>(1, max_side)(rng);
  std::bernoulli_distribution coin(density);
  for (std::size_t a = 0; a < d.a_count; ++a)
    for (std::size_t b = 0; b < d.b_count; ++b) {
      if (!coin(rng)) continue;
      const std::size_t mult = std::uniform_int_distribution<std::size_t>(1, max_mult)(rng);
      for (std::size_t i = 0; i < mult; ++i) d.edges.push_back({a, b, std::nullopt});
    }
  return d;
}

// Union of every nonempty B' whose neighborhood vertices all have at least
// alpha edges into B'. The valid sets are closed under union, so this is the
// largest one; empty when none exists.
inline std::vector<std::size_t> densest_cluster_by_subsets(const twodist::BipartiteMultigraph& d,
                                                          const Rational& alpha) {
  std::uint32_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << d.b_count); ++mask) {
    std::vector<long long> deg(d.a_count, 0);
    for (const auto& e : d.edges)
      if (mask >> e.b & 1) ++deg[e.a];
    bool ok = true;
    for (std::size_t a = 0; a < d.a_count && ok; ++a)
      if (deg[a] > 0 && Rational(deg[a]) < alpha) ok = false;
    if (ok) best |= mask;
  }
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < d.b_count; ++b)
    if (best >> b & 1) out.push_back(b);
  return out;
}

}  // namespace testing

#include "twodist/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "twodist/errors.hpp"
#include "twodist/sparsity.hpp"

namespace twodist {

namespace {

struct Builder {
  std::size_t count = 0;
  std::vector<Edge> edges;

  Vertex add_vertex() { return count++; }
  void add_edge(Vertex a, Vertex b) { edges.emplace_back(a, b); }
  // Path a - (p new vertices) - b; returns the inner vertices.
  std::vector<Vertex> add_link(Vertex a, Vertex b, std::size_t p) {
    std::vector<Vertex> inner;
    Vertex prev = a;
    for (std::size_t i = 0; i < p; ++i) {
      const Vertex v = add_vertex();
      add_edge(prev, v);
      inner.push_back(v);
      prev = v;
    }
    add_edge(prev, b);
    return inner;
  }
  Graph build() const { return Graph(count, edges); }
};

}  // namespace

Graph gen_gp(std::size_t p) {
  if (p < 2) throw RejectedInput("G_p needs p >= 2");
  Builder b;
  const Vertex h1 = b.add_vertex(), h2 = b.add_vertex();
  b.add_link(h1, h2, 1);
  for (std::size_t i = 1; i < p; ++i) b.add_link(h1, h2, 2);
  Graph g = b.build();
  if (g.max_degree() != p || g.vertex_count() != 2 * p + 1 || g.edge_count() != 3 * p - 1)
    throw InternalInvariantFailure("G_p construction does not match its counts");
  return g;
}

Graph gen_gpc(std::size_t p, std::size_t c) {
  if (c < 1 || p < c) throw RejectedInput("G_{p,C} needs p >= C >= 1");
  Builder b;
  const Vertex u = b.add_vertex(), x = b.add_vertex();
  b.add_edge(u, x);
  std::vector<Vertex> vs, ws;
  for (std::size_t i = 0; i < p; ++i) vs.push_back(b.add_vertex());
  for (std::size_t j = 0; j < c; ++j) ws.push_back(b.add_vertex());
  for (Vertex v : vs) b.add_edge(u, v);
  for (Vertex w : ws) b.add_edge(x, w);
  for (Vertex v : vs)
    for (Vertex w : ws) b.add_link(v, w, 1);
  Graph g = b.build();
  if (g.vertex_count() != (c + 1) * (p + 1) + 1 || g.edge_count() != 2 * p * c + p + c + 1)
    throw InternalInvariantFailure("G_{p,C} construction does not match its counts");
  return g;
}

std::optional<std::string> gpc_delta_warning(std::size_t p, const Graph& g) {
  if (g.max_degree() == p) return std::nullopt;
  return "warning: G_{p,C} as built has max degree " + std::to_string(g.max_degree()) + ", the nominal value is " +
         std::to_string(p);
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw RejectedInput("a cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

namespace {

constexpr int kAttempts = 8;

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) edges.emplace_back(perm[a], perm[b]);
  return Graph(g.vertex_count(), edges);
}

// Forests whose trees are small enough for 2(s-1)/s < bound.
Graph build_forest(std::size_t n, const Rational& bound, std::size_t delta_min, std::mt19937_64& rng) {
  std::size_t s_max = n;
  if (bound < Rational(2)) {
    // Largest s with s * (2 - bound) < 2.
    const Rational room = Rational(2) / (Rational(2) - bound);
    s_max = static_cast<std::size_t>(room.ceil() - 1);
  }
  if (delta_min > 0 && delta_min + 1 > s_max)
    throw GenerationFailure("no forest with max degree " + std::to_string(delta_min) + " has mad below " + bound.str());
  const std::size_t cap = std::max<std::size_t>(delta_min, 2);
  Builder b;
  std::vector<std::size_t> degree;
  auto grow = [&](std::size_t size, std::vector<Vertex> tree) {
    while (tree.size() < size && b.count < n) {
      const Vertex parent = tree[uniform(rng, 0, tree.size() - 1)];
      if (degree[parent] >= cap) continue;
      const Vertex v = b.add_vertex();
      degree.push_back(1);
      ++degree[parent];
      b.add_edge(parent, v);
      tree.push_back(v);
    }
  };
  const Vertex center = b.add_vertex();
  degree.push_back(0);
  std::vector<Vertex> first{center};
  for (std::size_t i = 0; i < delta_min; ++i) {
    const Vertex v = b.add_vertex();
    degree.push_back(1);
    ++degree[center];
    b.add_edge(center, v);
    first.push_back(v);
  }
  grow(uniform(rng, first.size(), std::max(first.size(), std::min(s_max, n))), first);
  while (b.count < n) {
    const Vertex root = b.add_vertex();
    degree.push_back(0);
    grow(uniform(rng, 1, std::min(s_max, n - b.count + 1)), {root});
  }
  return b.build();
}

// Hubs carry pieces that only meet at hubs, and every piece keeps
// 2|E| - bound*|V| <= 0 on each of its parts except for a small budget of
// denser ones. Hubs have no edges between them, so any subgraph's excess is
// the sum of its pieces' parts minus bound per hub, which keeps mad < bound.
Graph build_hubbed(std::size_t n, const Rational& bound, std::size_t delta_min, std::mt19937_64& rng) {
  auto excess = [&](long long v, long long e) { return Rational(2 * e) - bound * Rational(v); };
  // Shortest link (p inner vertices) with non-positive excess.
  const long long p_min = std::max<long long>(1, (Rational(2) / (bound - Rational(2))).ceil());
  // Longest comb with non-positive excess.
  long long r_max = 1;
  while (r_max < 19 && excess(2 * (r_max + 1) - 1, 3 * (r_max + 1) - 2).sign() <= 0) ++r_max;
  const bool cubic_ok = bound > Rational(12, 5);
  Rational budget = bound;  // remaining room for positive-excess pieces

  Builder b;
  const std::size_t hub_count = delta_min <= 2 ? 1 : std::min<std::size_t>(uniform(rng, 1, 4), n - delta_min);
  std::vector<Vertex> hubs;
  std::vector<std::size_t> target, deg;
  for (std::size_t i = 0; i < hub_count; ++i) {
    hubs.push_back(b.add_vertex());
    deg.push_back(0);
  }
  // Pieces cost up to two vertices per hub endpoint; leave the other hubs
  // what hub 0 does not need at that rate.
  const std::size_t hub0_cost = std::min(n - hub_count, 2 * delta_min);
  std::size_t spare = (n - hub_count - hub0_cost) / 2;
  target.push_back(delta_min);
  for (std::size_t i = 1; i < hub_count; ++i) {
    std::size_t t = uniform(rng, 0, 3) == 0 ? delta_min : uniform(rng, 1, std::max<std::size_t>(1, delta_min - 1));
    t = std::min(t, spare);
    spare -= t;
    target.push_back(t);
  }
  auto open = [&](std::size_t h) { return target[h] - deg[h]; };
  auto open_total = [&]() {
    std::size_t s = 0;
    for (std::size_t h = 0; h < hub_count; ++h) s += open(h);
    return s;
  };
  // Leaves cost one vertex per endpoint, so this many vertices always
  // suffice to finish.
  auto affordable = [&](std::size_t cost, std::size_t endpoints) {
    return b.count + cost + (open_total() - endpoints) <= n;
  };
  auto take_budget = [&](const Rational& ex) {
    if (ex.sign() <= 0) return true;
    if (ex >= budget) return false;
    budget = budget - ex;
    return true;
  };

  const bool cluster_mode = r_max >= 2 && uniform(rng, 0, 1) == 0;
  for (std::size_t h = 0; h < hub_count; ++h) {
    const bool full_hub = target[h] == delta_min;
    while (open(h) > 0) {
      std::size_t choice = uniform(rng, 0, 9);
      if (cluster_mode && full_hub) choice = 6;
      if (choice <= 1) {
        // leaf
      } else if (choice <= 5) {
        // link to another hub with room, or back to h
        std::vector<std::size_t> others;
        for (std::size_t o = 0; o < hub_count; ++o)
          if (o != h && open(o) > 0) others.push_back(o);
        const bool loop = others.empty() || uniform(rng, 0, 3) == 0;
        const std::size_t o = loop ? h : others[uniform(rng, 0, others.size() - 1)];
        std::size_t p = static_cast<std::size_t>(p_min) + uniform(rng, 0, 2);
        if (uniform(rng, 0, 7) == 0) p = uniform(rng, 1, 2);
        if (loop) p = std::max<std::size_t>(p, 2);
        if (open(h) >= (loop ? 2u : 1u) && affordable(p, 2) &&
            take_budget(excess(static_cast<long long>(p), static_cast<long long>(p) + 1))) {
          b.add_link(hubs[h], hubs[o], p);
          deg[h] += loop ? 2 : 1;
          if (!loop) ++deg[o];
          continue;
        }
      } else if (choice <= 7 && r_max >= 2 && open(h) >= 2) {
        // comb: r vertices on h, consecutive ones 1-linked
        const std::size_t r_top = std::min<std::size_t>(static_cast<std::size_t>(r_max), open(h));
        std::size_t r = uniform(rng, 2, r_top);
        // A lone leaf on a full hub lets C2 unravel its combs later.
        if (open(h) - r == 1) r = r < r_top ? r + 1 : r - 1;
        if (affordable(2 * r - 1, r)) {
          Vertex prev = b.add_vertex();
          b.add_edge(hubs[h], prev);
          for (std::size_t i = 1; i < r; ++i) {
            const Vertex next = b.add_vertex();
            b.add_edge(hubs[h], next);
            b.add_link(prev, next, 1);
            prev = next;
          }
          deg[h] += r;
          continue;
        }
      }
      const Vertex leaf = b.add_vertex();
      b.add_edge(hubs[h], leaf);
      ++deg[h];
    }
  }

  // Leftover vertices: subdivided cubic components, pendant paths and free
  // paths; pendant trees never raise a part's excess above zero.
  std::vector<Vertex> light;  // non-hub vertices that may take a pendant
  for (Vertex v = hub_count; v < b.count; ++v) light.push_back(v);
  while (b.count < n) {
    const std::size_t left = n - b.count;
    const std::size_t choice = uniform(rng, 0, 3);
    if (choice == 0 && cubic_ok && left >= 10) {
      const std::size_t s = uniform(rng, 2, std::min<std::size_t>(left / 5, 20));
      std::vector<Vertex> base;
      for (std::size_t i = 0; i < 2 * s; ++i) base.push_back(b.add_vertex());
      // Configuration model without loops, falling back to a prism.
      std::vector<Edge> pairs;
      for (int tries = 0; tries < 50 && pairs.empty(); ++tries) {
        std::vector<Vertex> stubs;
        for (Vertex v : base)
          for (int j = 0; j < 3; ++j) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
          if (stubs[i] == stubs[i + 1]) {
            pairs.clear();
            break;
          }
          pairs.emplace_back(stubs[i], stubs[i + 1]);
        }
      }
      if (pairs.empty())
        for (std::size_t i = 0; i < 2 * s; ++i) {
          pairs.emplace_back(base[i], base[(i + 1) % (2 * s)]);
          if (i < s) pairs.emplace_back(base[i], base[i + s]);
        }
      for (auto [x, y] : pairs) b.add_link(x, y, 1);
    } else if (choice <= 2 && !light.empty()) {
      const Vertex anchor = light[uniform(rng, 0, light.size() - 1)];
      const std::size_t len = uniform(rng, 1, std::min<std::size_t>(left, 6));
      Vertex prev = anchor;
      for (std::size_t i = 0; i < len; ++i) {
        const Vertex v = b.add_vertex();
        b.add_edge(prev, v);
        prev = v;
      }
    } else {
      const std::size_t len = uniform(rng, 1, std::min<std::size_t>(left, 30));
      Vertex prev = b.add_vertex();
      for (std::size_t i = 1; i < len; ++i) {
        const Vertex v = b.add_vertex();
        b.add_edge(prev, v);
        prev = v;
      }
    }
  }
  return b.build();
}

}  // namespace

Graph gen_random_sparse(std::size_t n, const Rational& mad_bound, std::size_t delta_min, std::uint64_t seed) {
  if (mad_bound >= Rational(3)) throw RejectedInput("mad bound must be below 3");
  if (n == 0 || delta_min >= n) throw RejectedInput("need 0 <= delta_min < n");
  if (mad_bound.sign() <= 0) throw GenerationFailure("no graph has mad below " + mad_bound.str());
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const Graph g = mad_bound <= Rational(2) ? build_forest(n, mad_bound, delta_min, rng)
                                             : build_hubbed(n, mad_bound, delta_min, rng);
    if (g.max_degree() >= delta_min && mad_exact(g) < mad_bound) return shuffled(g, rng);
  }
  throw GenerationFailure("could not generate a graph with mad below " + mad_bound.str() + " and max degree " +
                          std::to_string(delta_min));
}

Graph generate(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> Graph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GpSpec>) return gen_gp(s.p);
        else if constexpr (std::is_same_v<T, GpcSpec>) return gen_gpc(s.p, s.c);
        else if constexpr (std::is_same_v<T, CycleSpec>) return gen_cycle(s.n);
        else return gen_random_sparse(s.n, s.mad_bound, s.delta_min, s.seed);
      },
      spec);
}

}  // namespace twodist

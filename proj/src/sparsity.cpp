#include "twodist/sparsity.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>

#include "twodist/errors.hpp"

namespace twodist {

namespace {

using Capacity = __int128;

// Dinic max-flow on integer capacities.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : head_(nodes, npos) {}

  void add_edge(std::size_t from, std::size_t to, Capacity cap, Capacity reverse_cap = 0) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = arcs_.size() - 1;
    arcs_.push_back({from, head_[to], reverse_cap});
    head_[to] = arcs_.size() - 1;
  }

  Capacity max_flow(std::size_t s, std::size_t t) {
    Capacity total = 0;
    while (build_levels(s, t)) {
      cursor_ = head_;
      while (Capacity pushed = augment(s, t, std::numeric_limits<Capacity>::max())) total += pushed;
    }
    return total;
  }

  // Nodes reachable from s in the residual graph after max_flow.
  std::vector<char> source_side(std::size_t s) const {
    std::vector<char> seen(head_.size(), 0);
    std::deque<std::size_t> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t a = head_[u]; a != npos; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          queue.push_back(arcs_[a].to);
        }
    }
    return seen;
  }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  struct Arc {
    std::size_t to;
    std::size_t next;
    Capacity cap;
  };

  bool build_levels(std::size_t s, std::size_t t) {
    level_.assign(head_.size(), -1);
    std::deque<std::size_t> queue{s};
    level_[s] = 0;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t a = head_[u]; a != npos; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          queue.push_back(arcs_[a].to);
        }
    }
    return level_[t] >= 0;
  }

  Capacity augment(std::size_t u, std::size_t t, Capacity limit) {
    if (u == t) return limit;
    for (std::size_t& a = cursor_[u]; a != npos; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
      if (Capacity got = augment(arc.to, t, std::min(limit, arc.cap)); got > 0) {
        arc.cap -= got;
        arcs_[a ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::size_t> head_;
  std::vector<std::size_t> cursor_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
};

Capacity to_capacity(const mpz_class& z) {
  // Values here stay far below 2^100; go through the string form to stay exact.
  Capacity out = 0;
  const std::string s = z.get_str();
  for (char c : s)
    if (c != '-') out = out * 10 + (c - '0');
  return s[0] == '-' ? -out : out;
}

// Vertex set H maximizing den*|E(H)| - num*|V(H)|, where guess = num/den is
// the density being tested. Returns an empty set when that maximum is 0,
// i.e. when no subgraph has density strictly above the guess.
VertexSet denser_than(const Graph& g, const Rational& guess) {
  const std::size_t n = g.vertex_count();
  const Capacity num = to_capacity(guess.raw().get_num());
  const Capacity den = to_capacity(guess.raw().get_den());
  const Capacity m = static_cast<Capacity>(g.edge_count());
  const std::size_t source = n;
  const std::size_t sink = n + 1;
  FlowNetwork net(n + 2);
  const Capacity base = den * m;
  for (Vertex v = 0; v < n; ++v) {
    net.add_edge(source, v, base);
    net.add_edge(v, sink, base + 2 * num - den * static_cast<Capacity>(g.degree(v)));
  }
  for (const auto& [u, v] : g.edges()) net.add_edge(u, v, den, den);
  const Capacity cut = net.max_flow(source, sink);
  if (cut >= base * static_cast<Capacity>(n)) return {};
  const auto side = net.source_side(source);
  VertexSet h;
  for (Vertex v = 0; v < n; ++v)
    if (side[v]) h.push_back(v);
  return h;
}

std::size_t induced_edges(const Graph& g, const VertexSet& h) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : h) in[v] = 1;
  std::size_t count = 0;
  for (Vertex v : h)
    for (Vertex w : g.neighbors(v))
      if (in[w] && v < w) ++count;
  return count;
}

}  // namespace

Rational average_degree(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  return Rational(2 * static_cast<long long>(g.edge_count()), static_cast<long long>(g.vertex_count()));
}

VertexSet densest_subgraph(const Graph& g) {
  const long long n = static_cast<long long>(g.vertex_count());
  if (g.edge_count() == 0) return {};

  // Invariant: `best` realizes density lo, and no subgraph is denser than hi.
  VertexSet best(g.vertex_count());
  for (Vertex v = 0; v < best.size(); ++v) best[v] = v;
  Rational lo(static_cast<long long>(g.edge_count()), n);
  Rational hi(static_cast<long long>(g.edge_count()));
  if (n == 1) return best;
  // Distinct densities e/v with v <= n differ by at least 1/(n(n-1)).
  const Rational gap(1, n * (n - 1));
  // Midpoints are rounded down to this grid, which is fine enough to stay
  // strictly inside (lo, hi) while hi - lo >= gap.
  const long long grid = 4 * n * n;
  while (hi - lo >= gap) {
    const Rational half = (lo + hi) / 2;
    const Rational mid(Rational(half * grid).floor(), grid);
    VertexSet h = denser_than(g, mid);
    if (h.empty()) {
      hi = mid;
    } else {
      lo = Rational(static_cast<long long>(induced_edges(g, h)), static_cast<long long>(h.size()));
      best = std::move(h);
    }
  }
  return best;
}

Rational mad_exact(const Graph& g) {
  if (g.edge_count() == 0) return 0;
  const VertexSet h = densest_subgraph(g);
  return Rational(2 * static_cast<long long>(induced_edges(g, h)), static_cast<long long>(h.size()));
}

Rational mad_bruteforce(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMadBruteforceLimit)
    throw SizeLimitExceeded("mad_bruteforce supports at most " + std::to_string(kMadBruteforceLimit) +
                            " vertices, got " + std::to_string(n));
  std::vector<std::uint32_t> mask(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) mask[v] |= 1u << w;
  Rational best = 0;
  for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
    long long twice_edges = 0;
    for (Vertex v = 0; v < n; ++v)
      if (subset >> v & 1u) twice_edges += std::popcount(mask[v] & subset);
    const Rational ad(twice_edges, std::popcount(subset));
    if (ad > best) best = ad;
  }
  return best;
}

Girth girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::size_t best = unset;
  std::vector<std::size_t> dist(n), parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), unset);
    dist[s] = 0;
    parent[s] = n;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == unset) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == unset ? Girth::infinite() : Girth::finite(best);
}

std::optional<bool> euler_inequality_holds(const Rational& mad, const Girth& g) {
  if (g.is_infinite()) return std::nullopt;
  return (mad - 2) * Rational(static_cast<long long>(g.length()) - 2) < Rational(4);
}

}  // namespace twodist

#include "twodist/structure.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "twodist/errors.hpp"

namespace twodist {

Params::Params(Rational epsilon, long long k, bool strict)
    : epsilon_(std::move(epsilon)), k_(k), strict_(strict) {
  if (epsilon_.sign() <= 0) throw RejectedInput("epsilon must be positive, got " + epsilon_.str());
  big_m_ = Rational(6) / epsilon_;
  const Rational kk(k);
  m_minus_1_floor_ = (big_m_ - 1).floor();
  m_floor_ = big_m_.floor();
  m_ceil_ = big_m_.ceil();
  k_minus_m_ceil_ = (kk - big_m_).ceil();
  inv_eps_ceil_ = (Rational(1) / epsilon_).ceil();
  c3_sum_floor_ = (kk - big_m_ + 2).floor();
}

Params Params::make(const Rational& epsilon, long long k) {
  Params p(epsilon, k, true);
  if (!p.satisfies_invariants())
    throw RejectedInput("rejected params: need 0 < epsilon <= 1/20 and k >= 3/epsilon^2 (epsilon=" +
                        epsilon.str() + ", k=" + std::to_string(k) + ")");
  return p;
}

Params Params::relaxed(const Rational& epsilon, long long k) { return Params(epsilon, k, false); }

bool Params::satisfies_invariants() const {
  return epsilon_.sign() > 0 && epsilon_ <= Rational(1, 20) &&
         Rational(k_) >= Rational(3) / (epsilon_ * epsilon_);
}

namespace {

VertexSet members(const std::vector<char>& flags) {
  VertexSet out;
  for (Vertex v = 0; v < flags.size(); ++v)
    if (flags[v]) out.push_back(v);
  return out;
}

}  // namespace

VertexSet StructureSets::v1() const { return members(in_v1); }
VertexSet StructureSets::v2() const { return members(in_v2); }
VertexSet StructureSets::t() const { return members(in_t); }

std::string Reduction::kind() const {
  switch (value.index()) {
    case 0: return "C1";
    case 1: return "C2";
    case 2: return "C3";
    default: return "cluster";
  }
}

VertexSet Reduction::deletable() const {
  return std::visit(
      [](const auto& r) -> VertexSet {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, C1>) {
          return {r};
        } else if constexpr (std::is_same_v<T, C2Instance>) {
          return make_vertex_set({r.u1, r.u2});
        } else if constexpr (std::is_same_v<T, C3Instance>) {
          std::vector<Vertex> vs;
          for (const auto& l : r.links) vs.push_back(l.v);
          return make_vertex_set(std::move(vs));
        } else {
          std::vector<Vertex> vs = r.s_w_prime;
          vs.insert(vs.end(), r.t_prime.begin(), r.t_prime.end());
          return make_vertex_set(std::move(vs));
        }
      },
      value);
}

std::optional<Vertex> detect_c1(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) <= 1) return v;
  return std::nullopt;
}

std::optional<C2Instance> detect_c2(const Graph& g, const Params& params) {
  const auto k = params.k();
  auto fits = [&](Vertex w1, Vertex w2) {
    return static_cast<long long>(g.degree(w1)) <= k - 1 && static_cast<long long>(g.degree(w2)) <= k - 2;
  };
  std::optional<C2Instance> best;
  auto offer = [&](C2Instance c) {
    if (!best || std::tie(c.w1, c.u1, c.u2, c.w2) < std::tie(best->w1, best->u1, best->u2, best->w2)) best = c;
  };
  for (const PLink& link : find_p_links(g, 2)) {
    const Vertex a = link.inner[0], b = link.inner[1];
    if (fits(link.x, link.y)) offer({link.x, a, b, link.y});
    if (fits(link.y, link.x)) offer({link.y, b, a, link.x});
  }
  return best;
}

std::optional<C3Instance> detect_c3(const Graph& g, const Params& params) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const std::size_t d = g.degree(u);
    if (d < 3 || !params.at_most_m(d)) continue;
    const auto nb = g.neighbors(u);
    auto is_link = [&](Vertex v) { return g.degree(v) == 2 && params.at_most_m(g.degree(g.other_neighbor(v, u))); };
    // The pair {x, y} must contain every non-link neighbor; among valid pairs
    // the minimum degree sum takes the non-link ones plus the cheapest others,
    // which is what scanning all pairs would select (ties by lower id).
    std::vector<Vertex> forced, optional;
    for (Vertex v : nb) (is_link(v) ? optional : forced).push_back(v);
    if (forced.size() > 2) continue;
    std::stable_sort(optional.begin(), optional.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    std::vector<Vertex> pair = forced;
    for (std::size_t i = 0; pair.size() < 2; ++i) pair.push_back(optional[i]);
    if (!params.c3_degree_sum_ok(g.degree(pair[0]) + g.degree(pair[1]))) continue;
    std::sort(pair.begin(), pair.end());
    C3Instance inst{u, {}, pair[0], pair[1]};
    for (Vertex v : nb)
      if (v != pair[0] && v != pair[1]) inst.links.push_back({v, g.other_neighbor(v, u)});
    return inst;
  }
  return std::nullopt;
}

std::vector<char> v1_rule(const Graph& g, const Params& params, const std::vector<char>& current,
                          std::vector<std::optional<Vertex>>* witness) {
  const std::size_t n = g.vertex_count();
  std::vector<char> next(n, 0);
  if (witness) witness->assign(n, std::nullopt);
  for (Vertex u = 0; u < n; ++u) {
    const std::size_t d = g.degree(u);
    if (d < 2 || !params.at_most_m_minus_1(d)) continue;
    std::size_t in_v1 = 0, bounded = 0;
    std::optional<Vertex> bounded_only, any_bounded;
    for (Vertex v : g.neighbors(u)) {
      if (g.degree(v) != 2) continue;
      const Vertex other = g.other_neighbor(v, u);
      if (current[other]) ++in_v1;
      if (params.at_most_m_minus_1(g.degree(other))) {
        ++bounded;
        if (!any_bounded) any_bounded = v;
        if (!current[other] && !bounded_only) bounded_only = v;
      }
    }
    if (bounded + 1 >= d && in_v1 + 2 >= d) {
      next[u] = 1;
      if (witness) (*witness)[u] = bounded_only ? bounded_only : any_bounded;
    }
  }
  return next;
}

StructureSets compute_structure_sets(const Graph& g, const Params& params) {
  const std::size_t n = g.vertex_count();
  StructureSets sets;
  std::vector<char> current(n, 0);
  for (;;) {
    auto next = v1_rule(g, params, current, &sets.v1_witness);
    if (next == current) break;
    current = std::move(next);
  }
  sets.in_v1 = current;
  sets.in_v2.assign(n, 0);
  sets.in_t.assign(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    if (!sets.in_v1[u]) continue;
    std::size_t closed = 0;
    for (Vertex v : g.neighbors(u))
      if (g.degree(v) == 2 && sets.in_v1[g.other_neighbor(v, u)]) ++closed;
    if (closed + 1 >= g.degree(u)) sets.in_v2[u] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2) continue;
    const auto nb = g.neighbors(v);
    if (sets.in_v1[nb[0]] && sets.in_v1[nb[1]]) sets.in_t[v] = 1;
  }
  return sets;
}

WeakStructure weak_components(const Graph& g, const StructureSets& sets, const Params& params) {
  WeakStructure ws;
  std::vector<Vertex> base;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (sets.in_v1[v] || sets.in_t[v]) base.push_back(v);
  for (auto& comp : connected_components(g, base)) {
    WeakComponent wc;
    wc.is_weak = true;
    for (Vertex v : comp) {
      if (sets.in_v1[v]) ++wc.size;
      if (!sets.in_v2[v] && !sets.in_t[v]) wc.is_weak = false;
    }
    wc.vertices = std::move(comp);
    ws.components.push_back(std::move(wc));
  }
  std::vector<char> in_s_w(g.vertex_count(), 0);
  for (std::size_t i = 0; i < ws.components.size(); ++i) {
    const auto& c = ws.components[i];
    if (!c.is_weak || !params.below_inverse_epsilon(c.size)) continue;
    ws.small_weak.push_back(i);
    for (Vertex v : c.vertices)
      if (sets.in_v2[v]) {
        ws.s_w.push_back(v);
        in_s_w[v] = 1;
      }
  }
  ws.s_w = make_vertex_set(std::move(ws.s_w));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!params.at_least_k_minus_m(g.degree(v))) continue;
    const auto nb = g.neighbors(v);
    if (std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return in_s_w[w] != 0; })) ws.u.push_back(v);
  }
  return ws;
}

std::optional<PeelResult> peel_dense_cluster(const BipartiteMultigraph& d, const Rational& alpha) {
  std::vector<std::vector<std::size_t>> a_edges(d.a_count), b_edges(d.b_count);
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    a_edges[d.edges[e].a].push_back(e);
    b_edges[d.edges[e].b].push_back(e);
  }
  std::vector<char> a_alive(d.a_count, 1), b_alive(d.b_count, 1);
  std::vector<long long> a_deg(d.a_count);
  for (std::size_t a = 0; a < d.a_count; ++a) a_deg[a] = static_cast<long long>(a_edges[a].size());
  std::size_t b_left = d.b_count;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < d.a_count; ++a) {
      if (!a_alive[a] || Rational(a_deg[a]) >= alpha) continue;
      a_alive[a] = 0;
      changed = true;
      for (std::size_t e : a_edges[a]) {
        const std::size_t b = d.edges[e].b;
        if (!b_alive[b]) continue;
        b_alive[b] = 0;
        --b_left;
        for (std::size_t f : b_edges[b]) --a_deg[d.edges[f].a];
      }
    }
  }
  if (b_left == 0) return std::nullopt;
  PeelResult out;
  std::vector<char> in_a(d.a_count, 0);
  for (std::size_t b = 0; b < d.b_count; ++b) {
    if (!b_alive[b]) continue;
    out.b_kept.push_back(b);
    for (std::size_t e : b_edges[b]) in_a[d.edges[e].a] = 1;
  }
  for (std::size_t a = 0; a < d.a_count; ++a)
    if (in_a[a]) out.a_kept.push_back(a);
  return out;
}

std::optional<WeakCluster> find_weak_cluster(const Graph& g, const StructureSets& sets, const Params& params) {
  const WeakStructure ws = weak_components(g, sets, params);
  std::size_t heavy = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (params.at_least_k_minus_m(g.degree(v))) ++heavy;
  const Rational inv_eps = Rational(1) / params.epsilon();
  if (Rational(static_cast<long long>(ws.small_weak.size())) <= inv_eps * Rational(static_cast<long long>(heavy)))
    return std::nullopt;

  BipartiteMultigraph d;
  d.a_count = ws.u.size();
  d.b_count = ws.small_weak.size();
  std::map<Vertex, std::size_t> u_index;
  for (std::size_t i = 0; i < ws.u.size(); ++i) u_index[ws.u[i]] = i;
  std::vector<std::size_t> comp_of(g.vertex_count(), d.b_count);
  for (std::size_t b = 0; b < ws.small_weak.size(); ++b)
    for (Vertex v : ws.components[ws.small_weak[b]].vertices) comp_of[v] = b;
  for (Vertex v : ws.s_w) {
    std::optional<std::size_t> hub;
    for (Vertex w : g.neighbors(v)) {
      auto it = u_index.find(w);
      if (it == u_index.end()) continue;
      if (hub) throw InternalInvariantFailure("S_w vertex " + std::to_string(v) + " has two neighbors in U");
      hub = it->second;
    }
    if (!hub) throw InternalInvariantFailure("S_w vertex " + std::to_string(v) + " has no neighbor in U");
    d.edges.push_back({*hub, comp_of[v], v});
  }

  const auto peeled = peel_dense_cluster(d, inv_eps);
  if (!peeled) return std::nullopt;

  WeakCluster cluster;
  std::vector<std::size_t> b_new(d.b_count, d.b_count), a_new(d.a_count, d.a_count);
  for (std::size_t i = 0; i < peeled->b_kept.size(); ++i) {
    const std::size_t b = peeled->b_kept[i];
    b_new[b] = i;
    const auto& comp = ws.components[ws.small_weak[b]].vertices;
    cluster.components.push_back(comp);
    for (Vertex v : comp) {
      if (sets.in_v2[v]) cluster.s_w_prime.push_back(v);
      if (sets.in_t[v]) cluster.t_prime.push_back(v);
    }
  }
  for (std::size_t i = 0; i < peeled->a_kept.size(); ++i) {
    a_new[peeled->a_kept[i]] = i;
    cluster.u_prime.push_back(ws.u[peeled->a_kept[i]]);
  }
  cluster.s_w_prime = make_vertex_set(std::move(cluster.s_w_prime));
  cluster.t_prime = make_vertex_set(std::move(cluster.t_prime));
  cluster.d_prime.a_count = peeled->a_kept.size();
  cluster.d_prime.b_count = peeled->b_kept.size();
  for (const auto& e : d.edges)
    if (b_new[e.b] != d.b_count) cluster.d_prime.edges.push_back({a_new[e.a], b_new[e.b], e.payload});
  return cluster;
}

std::optional<Reduction> find_reduction(const Graph& g, const Params& params) {
  if (!params.satisfies_invariants())
    throw RejectedInput("rejected params: need 0 < epsilon <= 1/20 and k >= 3/epsilon^2");
  if (static_cast<long long>(g.max_degree()) > params.k()) throw RejectedInput("rejected: Delta exceeds k");
  if (auto c1 = detect_c1(g)) return Reduction{*c1};
  if (auto c2 = detect_c2(g, params)) return Reduction{*c2};
  if (auto c3 = detect_c3(g, params)) return Reduction{*c3};
  const auto sets = compute_structure_sets(g, params);
  if (auto cluster = find_weak_cluster(g, sets, params)) return Reduction{std::move(*cluster)};
  return std::nullopt;
}

std::optional<std::string> weak_structure_violation(const Graph& g, const StructureSets& sets, const Params& params) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (!sets.in_v1[u]) continue;
    std::size_t heavy = 0;
    for (Vertex w : g.neighbors(u)) {
      if (params.at_least_k_minus_m(g.degree(w))) ++heavy;
      if (sets.in_v1[w])
        return "V1 not stable: " + std::to_string(u) + " ~ " + std::to_string(w);
    }
    if (heavy != 1)
      return "V1 vertex " + std::to_string(u) + " has " + std::to_string(heavy) + " neighbors of degree >= k-M";
    if (sets.in_t[u]) return "vertex " + std::to_string(u) + " in both V1 and T";
  }
  return std::nullopt;
}

}  // namespace twodist

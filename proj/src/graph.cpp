#include "twodist/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "twodist/errors.hpp"

namespace twodist {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw RejectedInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") out of range for n=" + std::to_string(n));
    if (u == v) throw RejectedInput("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  std::size_t total = 0;
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    total += nb.size();
  }
  edge_count_ = total / 2;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, nb.size());
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Vertex Graph::other_neighbor(Vertex mid, Vertex from) const {
  const auto& nb = adjacency_[mid];
  return nb[0] == from ? nb[1] : nb[0];
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph square(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges;
  std::vector<Vertex> stamp(n, n);
  for (Vertex u = 0; u < n; ++u) {
    stamp[u] = u;
    auto take = [&](Vertex v) {
      if (stamp[v] != u) {
        stamp[v] = u;
        if (u < v) edges.emplace_back(u, v);
      }
    };
    for (Vertex w : g.neighbors(u)) {
      take(w);
      for (Vertex v : g.neighbors(w)) take(v);
    }
  }
  return Graph(n, edges);
}

std::vector<PLink> find_p_links(const Graph& g, std::size_t p) {
  std::vector<PLink> links;
  if (p == 0) return links;
  const std::size_t n = g.vertex_count();
  std::vector<char> on_path(n, 0);
  for (Vertex first = 0; first < n; ++first) {
    if (g.degree(first) != 2) continue;
    for (Vertex x : g.neighbors(first)) {
      PLink link{x, x, {first}};
      on_path[x] = on_path[first] = 1;
      Vertex prev = first;
      Vertex cur = g.other_neighbor(first, x);
      bool ok = true;
      while (link.inner.size() < p) {
        if (g.degree(cur) != 2 || on_path[cur]) {
          ok = false;
          break;
        }
        link.inner.push_back(cur);
        on_path[cur] = 1;
        Vertex next = g.other_neighbor(cur, prev);
        prev = cur;
        cur = next;
      }
      // cur is y; it may equal x but never an inner vertex.
      if (ok && std::find(link.inner.begin(), link.inner.end(), cur) != link.inner.end()) ok = false;
      for (Vertex v : link.inner) on_path[v] = 0;
      on_path[x] = 0;
      if (!ok) continue;
      link.y = cur;
      const bool canonical = p == 1 ? link.x < link.y : link.inner.front() < link.inner.back();
      if (canonical) links.push_back(std::move(link));
    }
  }
  std::sort(links.begin(), links.end());
  return links;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> kept) {
  Subgraph sub;
  sub.local.assign(g.vertex_count(), std::nullopt);
  sub.original = make_vertex_set({kept.begin(), kept.end()});
  for (Vertex i = 0; i < sub.original.size(); ++i) sub.local[sub.original[i]] = i;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < sub.original.size(); ++i)
    for (Vertex w : g.neighbors(sub.original[i]))
      if (auto j = sub.local[w]; j && i < *j) edges.emplace_back(i, *j);
  sub.graph = Graph(sub.original.size(), edges);
  return sub;
}

Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(g.vertex_count(), 0);
  for (Vertex v : removed) gone.at(v) = 1;
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!gone[v]) kept.push_back(v);
  return induced_subgraph(g, kept);
}

std::vector<VertexSet> connected_components(const Graph& g, std::span<const Vertex> restrict) {
  const std::size_t n = g.vertex_count();
  std::vector<char> allowed(n, 0), seen(n, 0);
  for (Vertex v : restrict) allowed.at(v) = 1;
  std::vector<VertexSet> comps;
  for (Vertex s = 0; s < n; ++s) {
    if (!allowed[s] || seen[s]) continue;
    VertexSet comp;
    std::deque<Vertex> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u))
        if (allowed[w] && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<Vertex> all(g.vertex_count());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  return connected_components(g, all);
}

VertexSet make_vertex_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace twodist

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace twodist {

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate-free
using Edge = std::pair<Vertex, Vertex>;

// Finite simple undirected graph on vertices 0..n-1.
// Immutable after construction; neighbor lists are sorted.
class Graph {
 public:
  Graph() = default;

  // Throws RejectedInput on an out-of-range id or a self-loop.
  // Parallel pairs are merged.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  // Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  // For a degree-2 vertex `mid`, the neighbor that is not `from`.
  Vertex other_neighbor(Vertex mid, Vertex from) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Path x - inner[0] - ... - inner[p-1] - y whose inner vertices all have
// degree exactly 2. x and y may coincide.
struct PLink {
  Vertex x;
  Vertex y;
  std::vector<Vertex> inner;

  friend bool operator==(const PLink&, const PLink&) = default;
  friend auto operator<=>(const PLink&, const PLink&) = default;
};

// Induced subgraph together with the id maps in both directions.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;              // new id -> old id
  std::vector<std::optional<Vertex>> local;  // old id -> new id (if kept)
};

Graph build_graph(std::size_t n, std::span<const Edge> edges);

// uv is an edge iff u, v are adjacent or share a neighbor.
Graph square(const Graph& g);

// Each p-link once. For p >= 2 the orientation with inner.front() < inner.back()
// is reported; for p = 1, the one with x < y. Sorted.
std::vector<PLink> find_p_links(const Graph& g, std::size_t p);

Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed);
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> kept);

// Components of g[restrict], each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g, std::span<const Vertex> restrict);
std::vector<VertexSet> connected_components(const Graph& g);

// Sorted, deduplicated copy.
VertexSet make_vertex_set(std::vector<Vertex> vs);

}  // namespace twodist

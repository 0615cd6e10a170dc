#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "twodist/graph.hpp"

namespace twodist {

// Bipartite multigraph with sides A = {0..a_count-1} and B = {0..b_count-1}.
// Parallel edges are distinct entries; `payload` carries the original-graph
// vertex an edge stands for, when there is one.
struct BipartiteMultigraph {
  struct Edge {
    std::size_t a;
    std::size_t b;
    std::optional<Vertex> payload;
  };

  std::size_t a_count = 0;
  std::size_t b_count = 0;
  std::vector<Edge> edges;

  std::vector<std::size_t> a_degrees() const {
    std::vector<std::size_t> d(a_count, 0);
    for (const auto& e : edges) ++d[e.a];
    return d;
  }
  std::vector<std::size_t> b_degrees() const {
    std::vector<std::size_t> d(b_count, 0);
    for (const auto& e : edges) ++d[e.b];
    return d;
  }
};

}  // namespace twodist

#include "twodist/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "twodist/errors.hpp"
#include "twodist/sparsity.hpp"

namespace twodist {

ListAssignment::ListAssignment(std::vector<ColorList> lists) {
  for (auto& l : lists) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  lists_ = std::make_shared<const std::vector<ColorList>>(std::move(lists));
}

ListAssignment ListAssignment::uniform(std::size_t n, std::size_t size) {
  ColorList base(size);
  std::iota(base.begin(), base.end(), Color{0});
  return ListAssignment(std::vector<ColorList>(n, base));
}

ListAssignment ListAssignment::random(std::size_t n, std::size_t size, std::size_t palette, std::uint64_t seed) {
  if (size > palette) throw RejectedInput("list size exceeds palette");
  std::mt19937_64 rng(seed);
  ColorList all(palette);
  std::iota(all.begin(), all.end(), Color{0});
  std::vector<ColorList> lists(n);
  for (auto& l : lists) {
    l.reserve(size);
    std::sample(all.begin(), all.end(), std::back_inserter(l), static_cast<std::ptrdiff_t>(size), rng);
  }
  return ListAssignment(std::move(lists));
}

bool ListAssignment::contains(Vertex v, Color c) const {
  const auto& l = (*this)[v];
  return std::binary_search(l.begin(), l.end(), c);
}

std::size_t ListAssignment::min_size() const {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < vertex_count(); ++v) best = std::min(best, (*this)[v].size());
  return vertex_count() == 0 ? 0 : best;
}

ListAssignment ListAssignment::restrict_to(std::span<const Vertex> kept) const {
  std::vector<std::size_t> idx;
  idx.reserve(kept.size());
  for (Vertex v : kept) idx.push_back(index_ ? (*index_)[v] : v);
  ListAssignment out;
  out.lists_ = lists_;
  out.index_ = std::make_shared<const std::vector<std::size_t>>(std::move(idx));
  return out;
}

bool PartialColoring::is_total() const {
  return std::all_of(colors_.begin(), colors_.end(), [](const auto& c) { return c.has_value(); });
}

std::size_t PartialColoring::colored_count() const {
  return static_cast<std::size_t>(
      std::count_if(colors_.begin(), colors_.end(), [](const auto& c) { return c.has_value(); }));
}

VertexSet conflict_set(const Graph& g, Vertex v, ConflictMode mode) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v)) {
    if (mode == ConflictMode::TwoDistance) out.push_back(w);
    for (Vertex x : g.neighbors(w))
      if (x != v) out.push_back(x);
  }
  return make_vertex_set(std::move(out));
}

namespace {

ColorList constraint_colors(const Graph& g, Vertex v, const PartialColoring& partial, ConflictMode mode) {
  ColorList used;
  auto take = [&](Vertex x) {
    if (x != v && partial[x]) used.push_back(*partial[x]);
  };
  for (Vertex w : g.neighbors(v)) {
    if (mode == ConflictMode::TwoDistance) take(w);
    for (Vertex x : g.neighbors(w)) take(x);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  return used;
}

}  // namespace

ColorList available_colors(const Graph& g, Vertex v, const PartialColoring& partial, const ListAssignment& lists,
                           ConflictMode mode) {
  const ColorList used = constraint_colors(g, v, partial, mode);
  const ColorList& list = lists[v];
  ColorList out;
  std::set_difference(list.begin(), list.end(), used.begin(), used.end(), std::back_inserter(out));
  return out;
}

std::size_t constraint_count(const Graph& g, Vertex v, const PartialColoring& partial, ConflictMode mode) {
  return constraint_colors(g, v, partial, mode).size();
}

namespace {

class Extender {
 public:
  Extender(const Graph& g, PartialColoring& partial, const ListAssignment& lists, ConflictMode mode)
      : g_(g), partial_(partial), lists_(lists), mode_(mode) {}

  // Bounds are stated for two-distance coloring; injective steps have one
  // constraint fewer.
  long long bound(long long two_distance_bound) const {
    return mode_ == ConflictMode::Injective ? two_distance_bound - 1 : two_distance_bound;
  }

  void check_bound(Vertex v, std::size_t constraints, long long limit, const char* step) const {
    if (static_cast<long long>(constraints) > limit)
      throw ContractViolation(std::string(step) + ": vertex " + std::to_string(v) + " has " +
                              std::to_string(constraints) + " constraint colors, bound " + std::to_string(limit));
  }

  void color_greedily(Vertex v, long long two_distance_bound, const char* step) {
    check_bound(v, constraint_count(g_, v, partial_, mode_), bound(two_distance_bound), step);
    const ColorList avail = available_colors(g_, v, partial_, lists_, mode_);
    if (avail.empty()) throw ContractViolation(std::string(step) + ": no color left for vertex " + std::to_string(v));
    partial_.assign(v, avail.front());
  }

  const Graph& g_;
  PartialColoring& partial_;
  const ListAssignment& lists_;
  ConflictMode mode_;
};

void check_precondition(const Graph& g, const PartialColoring& partial, const Reduction& red) {
  if (partial.vertex_count() != g.vertex_count())
    throw ContractViolation("partial coloring size does not match the graph");
  std::vector<char> removable(g.vertex_count(), 0);
  for (Vertex v : red.deletable()) removable.at(v) = 1;
  std::optional<Vertex> recolored;
  if (const auto* c3 = std::get_if<C3Instance>(&red.value)) recolored = c3->u;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (recolored && v == *recolored) continue;
    if (removable[v] == partial[v].has_value())
      throw ContractViolation("partial coloring must cover exactly the vertices outside the reduction (vertex " +
                              std::to_string(v) + ")");
  }
}

}  // namespace

PartialColoring extend_reduction(const Graph& g, PartialColoring partial, const Reduction& red,
                                 const ListAssignment& lists, ConflictMode mode, const Params& params) {
  check_precondition(g, partial, red);
  Extender ext(g, partial, lists, mode);
  const long long m_floor = params.big_m().floor();
  const long long two_m_floor = (params.big_m() * 2).floor();
  const long long k = params.k();
  auto deg = [&](Vertex v) { return static_cast<long long>(g.degree(v)); };

  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Reduction::C1>) {
          ext.color_greedily(r, k, "C1");
        } else if constexpr (std::is_same_v<T, C2Instance>) {
          ext.color_greedily(r.u1, 1 + deg(r.w1), "C2/u1");
          ext.color_greedily(r.u2, 2 + deg(r.w2), "C2/u2");
        } else if constexpr (std::is_same_v<T, C3Instance>) {
          partial.clear(r.u);
          ext.color_greedily(r.u, m_floor - 2 + deg(r.x) + deg(r.y), "C3/u");
          for (const auto& link : r.links) ext.color_greedily(link.v, two_m_floor, "C3/v");
        } else {
          const BipartiteMultigraph& d = r.d_prime;
          const auto a_deg = d.a_degrees();
          std::vector<ColorList> edge_lists;
          edge_lists.reserve(d.edges.size());
          for (const auto& e : d.edges) {
            const Vertex v = e.payload.value();
            ext.check_bound(v, constraint_count(g, v, partial, mode),
                            ext.bound(k + 1 - static_cast<long long>(a_deg[e.a])), "cluster/S'w");
            edge_lists.push_back(available_colors(g, v, partial, lists, mode));
          }
          const auto colors = list_edge_color_bipartite(d, edge_lists);
          for (std::size_t i = 0; i < d.edges.size(); ++i) partial.assign(*d.edges[i].payload, colors[i]);
          for (Vertex t : r.t_prime) ext.color_greedily(t, two_m_floor, "cluster/T'");
        }
      },
      red.value);
  return partial;
}

PartialColoring color_sparse(const Graph& g, const ListAssignment& lists, const Params& params, ConflictMode mode,
                             std::map<std::string, std::size_t>* kind_counts) {
  const std::size_t n = g.vertex_count();
  if (!params.satisfies_invariants())
    throw RejectedInput("rejected params: need 0 < epsilon <= 1/20 and k >= 3/epsilon^2");
  if (static_cast<long long>(g.max_degree()) > params.k()) throw RejectedInput("rejected: Delta exceeds k");
  if (lists.vertex_count() != n) throw RejectedInput("rejected: list assignment does not cover every vertex");
  const long long need = mode == ConflictMode::TwoDistance ? params.k() + 1 : params.k();
  if (n > 0 && static_cast<long long>(lists.min_size()) < need)
    throw RejectedInput("rejected: lists need at least " + std::to_string(need) + " colors");
  if (mad_exact(g) >= Rational(3) - params.epsilon()) throw RejectedInput("rejected: mad is not below 3 - epsilon");

  struct Level {
    std::vector<Vertex> ids;  // original ids of this level's vertices, ascending
    Reduction reduction;
  };
  std::vector<Level> levels;
  Graph current = g;
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), Vertex{0});
  while (current.vertex_count() > 0) {
    auto red = find_reduction(current, params);
    if (!red)
      throw InternalInvariantFailure("no reduction on a subgraph with " + std::to_string(current.vertex_count()) +
                                     " vertices although mad < 3 - epsilon");
    if (kind_counts) ++(*kind_counts)[red->kind()];
    Subgraph sub = delete_vertices(current, red->deletable());
    std::vector<Vertex> next_ids;
    next_ids.reserve(sub.original.size());
    for (Vertex v : sub.original) next_ids.push_back(ids[v]);
    levels.push_back({std::move(ids), std::move(*red)});
    ids = std::move(next_ids);
    current = std::move(sub.graph);
  }

  PartialColoring result(n);
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    const Graph level_graph = induced_subgraph(g, it->ids).graph;
    PartialColoring local(it->ids.size());
    for (Vertex i = 0; i < it->ids.size(); ++i)
      if (const auto& c = result[it->ids[i]]) local.assign(i, *c);
    local = extend_reduction(level_graph, std::move(local), it->reduction, lists.restrict_to(it->ids), mode, params);
    for (Vertex i = 0; i < it->ids.size(); ++i) result.assign(it->ids[i], local[i].value());
  }
  return result;
}

bool validate_coloring(const Graph& g, const PartialColoring& coloring, const ListAssignment& lists,
                       ConflictMode mode) {
  if (lists.vertex_count() != g.vertex_count()) return false;
  if (!validate_coloring(g, coloring, mode)) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!lists.contains(v, *coloring[v])) return false;
  return true;
}

bool validate_coloring(const Graph& g, const PartialColoring& coloring, ConflictMode mode) {
  if (coloring.vertex_count() != g.vertex_count() || !coloring.is_total()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex w : g.neighbors(v)) {
      if (mode == ConflictMode::TwoDistance && coloring[v] == coloring[w]) return false;
      for (Vertex x : g.neighbors(w))
        if (x != v && coloring[x] == coloring[v]) return false;
    }
  return true;
}

}  // namespace twodist

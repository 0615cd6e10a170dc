#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twodist/bipartite.hpp"
#include "twodist/graph.hpp"
#include "twodist/structure.hpp"

namespace twodist {

using Color = std::int64_t;
using ColorList = std::vector<Color>;  // sorted, duplicate-free

// TwoDistance: conflict iff adjacent or sharing a neighbor.
// Injective: conflict iff sharing a neighbor.
enum class ConflictMode { TwoDistance, Injective };

// Per-vertex color lists.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::vector<ColorList> lists);

  // Every vertex gets {0, ..., size-1}.
  static ListAssignment uniform(std::size_t n, std::size_t size);
  // Every vertex gets `size` colors sampled from {0, ..., palette-1}.
  static ListAssignment random(std::size_t n, std::size_t size, std::size_t palette, std::uint64_t seed);

  std::size_t vertex_count() const { return index_ ? index_->size() : (lists_ ? lists_->size() : 0); }
  const ColorList& operator[](Vertex v) const { return (*lists_)[index_ ? (*index_)[v] : v]; }
  bool contains(Vertex v, Color c) const;
  std::size_t min_size() const;

  // View of the lists of `kept` vertices, reindexed; shares storage.
  ListAssignment restrict_to(std::span<const Vertex> kept) const;

 private:
  std::shared_ptr<const std::vector<ColorList>> lists_;
  std::shared_ptr<const std::vector<std::size_t>> index_;
};

class PartialColoring {
 public:
  PartialColoring() = default;
  explicit PartialColoring(std::size_t n) : colors_(n) {}

  std::size_t vertex_count() const { return colors_.size(); }
  const std::optional<Color>& operator[](Vertex v) const { return colors_[v]; }
  void assign(Vertex v, Color c) { colors_[v] = c; }
  void clear(Vertex v) { colors_[v].reset(); }
  bool is_total() const;
  std::size_t colored_count() const;

  friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

 private:
  std::vector<std::optional<Color>> colors_;
};

VertexSet conflict_set(const Graph& g, Vertex v, ConflictMode mode);

// L(v) minus the colors of colored conflict-set members.
ColorList available_colors(const Graph& g, Vertex v, const PartialColoring& partial, const ListAssignment& lists,
                           ConflictMode mode);

// Number of distinct colors among colored conflict-set members.
std::size_t constraint_count(const Graph& g, Vertex v, const PartialColoring& partial, ConflictMode mode);

// Extends a coloring of g minus red.deletable() to all of g, following the
// order of the matching extension argument and taking the smallest
// available color at each step. For C3, u is uncolored and recolored first.
// Before each step the number of constraint colors is checked against the
// argument's bound; exceeding it, or running out of colors, throws
// ContractViolation. Accepts relaxed params.
PartialColoring extend_reduction(const Graph& g, PartialColoring partial, const Reduction& red,
                                 const ListAssignment& lists, ConflictMode mode, const Params& params);

// Recursive colorer: find a reduction, delete it, color the rest, extend.
// Requires mad(g) < 3 - eps, max degree <= k, strict params and lists of
// size >= k+1 (TwoDistance) or >= k (Injective); throws RejectedInput
// otherwise. A missing reduction throws InternalInvariantFailure.
// `kind_counts`, when given, receives how often each reduction kind was used.
PartialColoring color_sparse(const Graph& g, const ListAssignment& lists, const Params& params, ConflictMode mode,
                             std::map<std::string, std::size_t>* kind_counts = nullptr);

// Edge lists for a bipartite multigraph with |L(e)| >= max(d(a), d(b)) for
// every edge (RejectedInput otherwise). Returns one color per edge such that
// edges sharing an endpoint differ.
std::vector<Color> list_edge_color_bipartite(const BipartiteMultigraph& d, std::span<const ColorList> lists);

// True iff `colors` is a proper list edge coloring of d.
bool is_proper_list_edge_coloring(const BipartiteMultigraph& d, std::span<const ColorList> lists,
                                  std::span<const Color> colors);

// Chromatic number of the mode's conflict graph by branch and bound.
// Throws SizeLimitExceeded above kExactChromaticLimit vertices.
std::size_t exact_chromatic(const Graph& g, ConflictMode mode);
inline constexpr std::size_t kExactChromaticLimit = 24;

// True iff the coloring is total, respects the lists and has no conflicting
// pair with equal colors.
bool validate_coloring(const Graph& g, const PartialColoring& coloring, const ListAssignment& lists,
                       ConflictMode mode);

// Same, without lists.
bool validate_coloring(const Graph& g, const PartialColoring& coloring, ConflictMode mode);

}  // namespace twodist

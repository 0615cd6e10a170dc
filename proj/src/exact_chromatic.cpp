#include <bit>
#include <cstdint>
#include <string>

#include "twodist/coloring.hpp"
#include "twodist/errors.hpp"

namespace twodist {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> conflict_masks(const Graph& g, ConflictMode mode) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex w : conflict_set(g, v, mode)) adj[v] |= Mask{1} << w;
  return adj;
}

std::size_t max_clique(const std::vector<Mask>& adj, Mask candidates, std::size_t size, std::size_t best) {
  if (candidates == 0) return std::max(size, best);
  if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return best;
  while (candidates != 0) {
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) break;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    best = max_clique(adj, candidates & adj[v], size + 1, best);
  }
  return std::max(size, best);
}

class Colorer {
 public:
  Colorer(const std::vector<Mask>& adj, std::size_t colors) : adj_(adj), k_(colors), color_(adj.size(), -1) {}

  bool run() { return search(0); }

 private:
  // DSATUR order: most distinct neighbor colors first, then most conflicts.
  bool search(std::size_t colored) {
    const std::size_t n = adj_.size();
    if (colored == n) return true;
    int pick = -1, pick_sat = -1, pick_deg = -1;
    Mask pick_used = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (color_[v] >= 0) continue;
      Mask used = 0;
      for (Mask rest = adj_[v]; rest != 0; rest &= rest - 1) {
        const int w = std::countr_zero(rest);
        if (color_[w] >= 0) used |= Mask{1} << color_[w];
      }
      const int sat = std::popcount(used);
      const int deg = std::popcount(adj_[v]);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = static_cast<int>(v);
        pick_sat = sat;
        pick_deg = deg;
        pick_used = used;
      }
    }
    // A color beyond the highest one in use is interchangeable with any other.
    int highest = -1;
    for (int c : color_) highest = std::max(highest, c);
    const int limit = std::min<int>(static_cast<int>(k_) - 1, highest + 1);
    for (int c = 0; c <= limit; ++c) {
      if (pick_used & (Mask{1} << c)) continue;
      color_[pick] = c;
      if (search(colored + 1)) return true;
    }
    color_[pick] = -1;
    return false;
  }

  const std::vector<Mask>& adj_;
  std::size_t k_;
  std::vector<int> color_;
};

}  // namespace

std::size_t exact_chromatic(const Graph& g, ConflictMode mode) {
  const std::size_t n = g.vertex_count();
  if (n > kExactChromaticLimit)
    throw SizeLimitExceeded("exact chromatic number is limited to " + std::to_string(kExactChromaticLimit) +
                            " vertices, got " + std::to_string(n));
  if (n == 0) return 0;
  const auto adj = conflict_masks(g, mode);
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::size_t k = std::max<std::size_t>(1, max_clique(adj, all, 0, 0));
  while (!Colorer(adj, k).run()) ++k;
  return k;
}

}  // namespace twodist

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "twodist/coloring.hpp"
#include "twodist/errors.hpp"

namespace twodist {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::vector<ColorList> normalized(std::span<const ColorList> lists) {
  std::vector<ColorList> out(lists.begin(), lists.end());
  for (auto& l : out) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return out;
}

// Proper edge coloring with max-degree many colors (Koenig), by alternating
// path recoloring. Colors are 0..delta-1.
std::vector<std::size_t> koenig_coloring(const BipartiteMultigraph& d) {
  const auto a_deg = d.a_degrees();
  const auto b_deg = d.b_degrees();
  std::size_t delta = 0;
  for (auto x : a_deg) delta = std::max(delta, x);
  for (auto x : b_deg) delta = std::max(delta, x);
  // at[side][vertex][color] = edge index or kNone; side 0 = A, 1 = B.
  std::vector<std::vector<std::size_t>> at_a(d.a_count, std::vector<std::size_t>(delta, kNone));
  std::vector<std::vector<std::size_t>> at_b(d.b_count, std::vector<std::size_t>(delta, kNone));
  std::vector<std::size_t> color(d.edges.size(), kNone);
  auto free_color = [&](const std::vector<std::size_t>& slots) {
    for (std::size_t c = 0; c < slots.size(); ++c)
      if (slots[c] == kNone) return c;
    throw InternalInvariantFailure("edge coloring: no free color at a vertex");
  };
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const std::size_t a = d.edges[e].a, b = d.edges[e].b;
    const std::size_t alpha = free_color(at_a[a]);
    const std::size_t beta = free_color(at_b[b]);
    if (at_b[b][alpha] != kNone) {
      // Swap alpha/beta along the alternating path starting at b with alpha.
      std::vector<std::size_t> path;
      bool on_b = true;
      std::size_t v = b, c = alpha;
      while (true) {
        const std::size_t f = on_b ? at_b[v][c] : at_a[v][c];
        if (f == kNone) break;
        path.push_back(f);
        v = on_b ? d.edges[f].a : d.edges[f].b;
        on_b = !on_b;
        c = c == alpha ? beta : alpha;
      }
      for (std::size_t f : path) {
        at_a[d.edges[f].a][color[f]] = kNone;
        at_b[d.edges[f].b][color[f]] = kNone;
      }
      for (std::size_t f : path) {
        color[f] = color[f] == alpha ? beta : alpha;
        at_a[d.edges[f].a][color[f]] = f;
        at_b[d.edges[f].b][color[f]] = f;
      }
    }
    color[e] = alpha;
    at_a[a][alpha] = e;
    at_b[b][alpha] = e;
  }
  return color;
}

// Galvin's kernel argument: given strict preferences at every vertex
// (rank = number of incident edges preferred), colors are handed out one at
// a time to a stable matching of the uncolored edges whose list holds the
// color. Success is guaranteed when rank_a + rank_b < |L(e)| for every edge;
// otherwise the attempt may still succeed and is checked.
std::optional<std::vector<Color>> kernel_method(const BipartiteMultigraph& d, const std::vector<ColorList>& lists,
                                                const std::vector<std::size_t>& rank_a,
                                                const std::vector<std::size_t>& rank_b) {
  const std::size_t m = d.edges.size();
  std::map<Color, std::vector<std::size_t>> holders;
  for (std::size_t e = 0; e < m; ++e)
    for (Color c : lists[e]) holders[c].push_back(e);

  std::vector<std::optional<Color>> result(m);
  std::size_t remaining = m;
  std::vector<std::vector<std::size_t>> proposals(d.a_count);
  std::vector<std::size_t> next(d.a_count), held(d.b_count);
  for (const auto& [gamma, edges] : holders) {
    if (remaining == 0) break;
    for (auto& p : proposals) p.clear();
    for (std::size_t e : edges)
      if (!result[e]) proposals[d.edges[e].a].push_back(e);
    // Gale-Shapley with A proposing.
    std::vector<std::size_t> free_a;
    for (std::size_t a = 0; a < d.a_count; ++a) {
      auto& p = proposals[a];
      if (p.empty()) continue;
      std::sort(p.begin(), p.end(), [&](std::size_t x, std::size_t y) { return rank_a[x] < rank_a[y]; });
      free_a.push_back(a);
    }
    std::fill(next.begin(), next.end(), 0);
    std::fill(held.begin(), held.end(), kNone);
    while (!free_a.empty()) {
      const std::size_t a = free_a.back();
      free_a.pop_back();
      if (next[a] >= proposals[a].size()) continue;
      const std::size_t e = proposals[a][next[a]++];
      const std::size_t b = d.edges[e].b;
      if (held[b] == kNone) {
        held[b] = e;
      } else if (rank_b[e] < rank_b[held[b]]) {
        free_a.push_back(d.edges[held[b]].a);
        held[b] = e;
      } else {
        free_a.push_back(a);
      }
    }
    for (std::size_t e : held)
      if (e != kNone) {
        result[e] = gamma;
        --remaining;
      }
  }
  if (remaining != 0) return std::nullopt;
  std::vector<Color> out(m);
  for (std::size_t e = 0; e < m; ++e) out[e] = *result[e];
  return out;
}

using Ranks = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;

// Ranks at both sides from a proper edge coloring: one side prefers high
// colors, the other low ones.
Ranks ranks_from_coloring(const BipartiteMultigraph& d, const std::vector<std::size_t>& color, bool a_prefers_high) {
  const std::size_t m = d.edges.size();
  std::vector<std::size_t> rank_a(m, 0), rank_b(m, 0);
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t f = 0; f < m; ++f) {
      if (d.edges[f].a == d.edges[e].a && (a_prefers_high ? color[f] > color[e] : color[f] < color[e])) ++rank_a[e];
      if (d.edges[f].b == d.edges[e].b && (a_prefers_high ? color[f] < color[e] : color[f] > color[e])) ++rank_b[e];
    }
  return {rank_a, rank_b};
}

// Fixes one side's order by a slack heuristic, then schedules the other side
// earliest-deadline-first against rank <= |L(e)| - 1 - (fixed rank).
Ranks ranks_by_deadline(const BipartiteMultigraph& d, const std::vector<ColorList>& lists, bool schedule_a) {
  const std::size_t m = d.edges.size();
  const auto a_deg = d.a_degrees();
  const auto b_deg = d.b_degrees();
  auto fixed_vertex = [&](std::size_t e) { return schedule_a ? d.edges[e].b : d.edges[e].a; };
  auto scheduled_vertex = [&](std::size_t e) { return schedule_a ? d.edges[e].a : d.edges[e].b; };
  auto scheduled_degree = [&](std::size_t e) { return schedule_a ? a_deg[d.edges[e].a] : b_deg[d.edges[e].b]; };
  const std::size_t fixed_count = schedule_a ? d.b_count : d.a_count;
  const std::size_t scheduled_count = schedule_a ? d.a_count : d.b_count;

  std::vector<std::vector<std::size_t>> at_fixed(fixed_count), at_scheduled(scheduled_count);
  for (std::size_t e = 0; e < m; ++e) {
    at_fixed[fixed_vertex(e)].push_back(e);
    at_scheduled[scheduled_vertex(e)].push_back(e);
  }
  std::vector<std::size_t> fixed_rank(m), scheduled_rank(m);
  for (auto& es : at_fixed) {
    // Least slack at the scheduled end goes first.
    std::stable_sort(es.begin(), es.end(), [&](std::size_t x, std::size_t y) {
      const long long sx = static_cast<long long>(lists[x].size()) - static_cast<long long>(scheduled_degree(x));
      const long long sy = static_cast<long long>(lists[y].size()) - static_cast<long long>(scheduled_degree(y));
      return sx < sy;
    });
    for (std::size_t i = 0; i < es.size(); ++i) fixed_rank[es[i]] = i;
  }
  for (auto& es : at_scheduled) {
    auto deadline = [&](std::size_t e) {
      return static_cast<long long>(lists[e].size()) - 1 - static_cast<long long>(fixed_rank[e]);
    };
    std::stable_sort(es.begin(), es.end(), [&](std::size_t x, std::size_t y) { return deadline(x) < deadline(y); });
    for (std::size_t i = 0; i < es.size(); ++i) scheduled_rank[es[i]] = i;
  }
  if (schedule_a) return {scheduled_rank, fixed_rank};
  return {fixed_rank, scheduled_rank};
}

class Backtracker {
 public:
  Backtracker(const BipartiteMultigraph& d, const std::vector<ColorList>& lists) : d_(d), lists_(lists) {
    const std::size_t m = d.edges.size();
    neighbors_.resize(m);
    std::vector<std::vector<std::size_t>> by_a(d.a_count), by_b(d.b_count);
    for (std::size_t e = 0; e < m; ++e) {
      by_a[d.edges[e].a].push_back(e);
      by_b[d.edges[e].b].push_back(e);
    }
    for (std::size_t e = 0; e < m; ++e) {
      for (std::size_t f : by_a[d.edges[e].a])
        if (f != e) neighbors_[e].push_back(f);
      for (std::size_t f : by_b[d.edges[e].b])
        if (f != e) neighbors_[e].push_back(f);
    }
    color_.assign(m, std::nullopt);
  }

  std::optional<std::vector<Color>> run() {
    if (!search(d_.edges.size())) return std::nullopt;
    std::vector<Color> out;
    for (const auto& c : color_) out.push_back(*c);
    return out;
  }

 private:
  ColorList options(std::size_t e) const {
    ColorList out;
    for (Color c : lists_[e]) {
      bool used = false;
      for (std::size_t f : neighbors_[e])
        if (color_[f] == c) {
          used = true;
          break;
        }
      if (!used) out.push_back(c);
    }
    return out;
  }

  bool search(std::size_t left) {
    if (left == 0) return true;
    // Most constrained uncolored edge first.
    std::size_t best = kNone;
    ColorList best_opts;
    for (std::size_t e = 0; e < color_.size(); ++e) {
      if (color_[e]) continue;
      ColorList opts = options(e);
      if (opts.empty()) return false;
      if (best == kNone || opts.size() < best_opts.size()) {
        best = e;
        best_opts = std::move(opts);
      }
    }
    for (Color c : best_opts) {
      color_[best] = c;
      if (search(left - 1)) return true;
    }
    color_[best].reset();
    return false;
  }

  const BipartiteMultigraph& d_;
  const std::vector<ColorList>& lists_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<std::optional<Color>> color_;
};

}  // namespace

std::vector<Color> list_edge_color_bipartite(const BipartiteMultigraph& d, std::span<const ColorList> raw_lists) {
  if (raw_lists.size() != d.edges.size()) throw RejectedInput("edge list count does not match edge count");
  const auto lists = normalized(raw_lists);
  const auto a_deg = d.a_degrees();
  const auto b_deg = d.b_degrees();
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const auto& edge = d.edges[e];
    if (edge.a >= d.a_count || edge.b >= d.b_count) throw RejectedInput("edge endpoint out of range");
    if (lists[e].size() < std::max(a_deg[edge.a], b_deg[edge.b]))
      throw RejectedInput("edge " + std::to_string(e) + " has a list shorter than its larger endpoint degree");
  }
  if (d.edges.empty()) return {};

  const auto koenig = koenig_coloring(d);
  const Ranks attempts[] = {ranks_by_deadline(d, lists, true), ranks_by_deadline(d, lists, false),
                            ranks_from_coloring(d, koenig, true), ranks_from_coloring(d, koenig, false)};
  for (const auto& [rank_a, rank_b] : attempts)
    if (auto out = kernel_method(d, lists, rank_a, rank_b)) return *out;
  if (auto out = Backtracker(d, lists).run()) return *out;
  throw InternalInvariantFailure("bipartite list edge coloring failed on a precondition-satisfying input");
}

bool is_proper_list_edge_coloring(const BipartiteMultigraph& d, std::span<const ColorList> lists,
                                  std::span<const Color> colors) {
  if (lists.size() != d.edges.size() || colors.size() != d.edges.size()) return false;
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    if (std::find(lists[e].begin(), lists[e].end(), colors[e]) == lists[e].end()) return false;
    for (std::size_t f = e + 1; f < d.edges.size(); ++f) {
      const bool share = d.edges[e].a == d.edges[f].a || d.edges[e].b == d.edges[f].b;
      if (share && colors[e] == colors[f]) return false;
    }
  }
  return true;
}

}  // namespace twodist

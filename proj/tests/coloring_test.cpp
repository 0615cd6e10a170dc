#include <doctest.h>

#include <functional>
#include <iterator>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "support.hpp"
#include "twodist/coloring.hpp"
#include "twodist/errors.hpp"
#include "twodist/families.hpp"
#include "twodist/structure.hpp"

using namespace twodist;

namespace {

constexpr auto kTwo = ConflictMode::TwoDistance;
constexpr auto kInj = ConflictMode::Injective;

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

PartialColoring with_colors(std::size_t n, std::initializer_list<std::pair<Vertex, Color>> colors) {
  PartialColoring p(n);
  for (auto [v, c] : colors) p.assign(v, c);
  return p;
}

// Colors every vertex outside `skip` greedily with the smallest list color
// free of conflicts. Test scaffolding for building extension inputs.
PartialColoring greedy_outside(const Graph& g, const VertexSet& skip, const ListAssignment& lists, ConflictMode mode) {
  PartialColoring p(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (std::binary_search(skip.begin(), skip.end(), v)) continue;
    const auto avail = available_colors(g, v, p, lists, mode);
    REQUIRE(!avail.empty());
    p.assign(v, avail.front());
  }
  return p;
}

bool list_edge_coloring_by_search(const BipartiteMultigraph& d, const std::vector<ColorList>& lists) {
  std::vector<Color> color(d.edges.size());
  std::function<bool(std::size_t)> go = [&](std::size_t e) {
    if (e == d.edges.size()) return true;
    for (Color c : lists[e]) {
      bool ok = true;
      for (std::size_t f = 0; f < e && ok; ++f)
        if ((d.edges[f].a == d.edges[e].a || d.edges[f].b == d.edges[e].b) && color[f] == c) ok = false;
      if (!ok) continue;
      color[e] = c;
      if (go(e + 1)) return true;
    }
    return false;
  };
  return go(0);
}

// Lists of exactly max(d(a), d(b)) colors drawn from `extra` more colors
// than the maximum degree.
std::vector<ColorList> tight_lists(const BipartiteMultigraph& d, std::size_t extra, std::mt19937_64& rng) {
  const auto da = d.a_degrees(), db = d.b_degrees();
  const std::size_t palette = std::max(*std::max_element(da.begin(), da.end()),
                                       *std::max_element(db.begin(), db.end())) + extra;
  std::vector<ColorList> lists;
  std::vector<Color> all(palette);
  std::iota(all.begin(), all.end(), 0);
  for (const auto& e : d.edges) {
    ColorList l;
    std::sample(all.begin(), all.end(), std::back_inserter(l), std::max(da[e.a], db[e.b]), rng);
    lists.push_back(l);
  }
  return lists;
}

}  // namespace

TEST_CASE("conflict sets") {
  const Graph c5 = gen_cycle(5);
  CHECK(conflict_set(c5, 0, kTwo) == VertexSet{1, 2, 3, 4});
  const Graph k2 = complete(2);
  CHECK(conflict_set(k2, 0, kInj).empty());
  const Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(conflict_set(p3, 1, kInj).empty());
  CHECK(conflict_set(p3, 0, kInj) == VertexSet{2});
}

TEST_CASE("conflict sets match the definition; injective is contained in two-distance") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = testing::random_graph(12, 0.25, seed);
    for (bool injective : {false, true}) {
      const auto m = testing::conflict_matrix(g, injective);
      for (Vertex v = 0; v < 12; ++v) {
        VertexSet expected;
        for (Vertex u = 0; u < 12; ++u)
          if (m[v][u]) expected.push_back(u);
        CHECK(conflict_set(g, v, injective ? kInj : kTwo) == expected);
      }
    }
    for (Vertex v = 0; v < 12; ++v) {
      const auto inj = conflict_set(g, v, kInj), two = conflict_set(g, v, kTwo);
      CHECK(std::includes(two.begin(), two.end(), inj.begin(), inj.end()));
    }
  }
}

TEST_CASE("available colors") {
  const Graph c5 = gen_cycle(5);
  const ListAssignment lists = ListAssignment(std::vector<ColorList>(5, ColorList{1, 2, 3, 4, 5}));
  const auto partial = with_colors(5, {{1, 1}, {2, 2}, {3, 3}, {4, 4}});
  CHECK(available_colors(c5, 0, partial, lists, kTwo) == ColorList{5});
  CHECK(constraint_count(c5, 0, partial, kTwo) == 4);
  CHECK(available_colors(c5, 0, PartialColoring(5), lists, kTwo) == ColorList{1, 2, 3, 4, 5});

  // Equal-colored constraints count once.
  const auto repeated = with_colors(5, {{1, 1}, {4, 1}});
  CHECK(constraint_count(c5, 0, repeated, kTwo) == 1);

  const Graph k2 = complete(2);
  const ListAssignment single(std::vector<ColorList>{{7}, {7}});
  CHECK(available_colors(k2, 0, with_colors(2, {{1, 7}}), single, kInj) == ColorList{7});
  CHECK(available_colors(k2, 0, with_colors(2, {{1, 7}}), single, kTwo).empty());
}

TEST_CASE("list assignments") {
  const auto u = ListAssignment::uniform(3, 4);
  CHECK(u[2] == ColorList{0, 1, 2, 3});
  const auto r = ListAssignment::random(50, 5, 9, 11);
  CHECK(r.min_size() == 5);
  for (Vertex v = 0; v < 50; ++v) {
    CHECK(std::is_sorted(r[v].begin(), r[v].end()));
    CHECK(r[v].back() < 9);
  }
  CHECK(ListAssignment::random(50, 5, 9, 11)[7] == r[7]);
  const auto view = r.restrict_to(std::vector<Vertex>{4, 9});
  CHECK(view.vertex_count() == 2);
  CHECK(view[1] == r[9]);
  CHECK(view.restrict_to(std::vector<Vertex>{1})[0] == r[9]);
  CHECK(r.contains(3, r[3][0]));
  CHECK_THROWS_AS(ListAssignment::random(3, 5, 4, 1), RejectedInput);
}

TEST_CASE("validate_coloring") {
  const Graph c5 = gen_cycle(5);
  const auto rainbow = with_colors(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(validate_coloring(c5, rainbow, kTwo));
  const auto k2 = with_colors(2, {{0, 1}, {1, 1}});
  CHECK(validate_coloring(complete(2), k2, kInj));
  CHECK(!validate_coloring(complete(2), k2, kTwo));
  CHECK(!validate_coloring(c5, with_colors(5, {{0, 1}}), kTwo));
  const ListAssignment lists(std::vector<ColorList>(5, ColorList{1, 2, 3, 4}));
  CHECK(!validate_coloring(c5, rainbow, lists, kTwo));
}

TEST_CASE("extend C1") {
  // K_{1,3} with a leaf removed: center 0, leaves 1..3, k = 3.
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const Params params = Params::relaxed(Rational(1, 2), 3);
  const ListAssignment lists(std::vector<ColorList>(4, ColorList{1, 2, 3, 4}));
  const auto partial = with_colors(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto done = extend_reduction(star, partial, Reduction{Vertex{3}}, lists, kTwo, params);
  CHECK(done[3] == std::optional<Color>(4));
  CHECK(validate_coloring(star, done, lists, kTwo));

  // Uncovered vertices other than the deletable one break the precondition.
  CHECK_THROWS_AS(extend_reduction(star, with_colors(4, {{0, 1}}), Reduction{Vertex{3}}, lists, kTwo, params),
                  ContractViolation);
  // No color left: the leaf's only color is taken.
  const ListAssignment tight(std::vector<ColorList>{{1}, {2}, {3}, {1, 2, 3}});
  CHECK_THROWS_AS(extend_reduction(star, partial, Reduction{Vertex{3}}, tight, kTwo, params), ContractViolation);
}

TEST_CASE("extend C2 on a path") {
  const Graph p6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  const Params params = Params::relaxed(Rational(1, 2), 4);
  const auto c2 = detect_c2(p6, params);
  REQUIRE(c2);
  const Reduction red{*c2};
  for (auto mode : {kTwo, kInj}) {
    const auto lists = ListAssignment::uniform(6, mode == kTwo ? 5 : 4);
    const auto partial = greedy_outside(p6, red.deletable(), lists, mode);
    const auto done = extend_reduction(p6, partial, red, lists, mode, params);
    CHECK(done.is_total());
    CHECK(validate_coloring(p6, done, lists, mode));
  }
}

TEST_CASE("extend C3 recolors u first") {
  const Graph spider(6, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}});
  const Params params = Params::relaxed(Rational(1, 2), 20);
  const auto c3 = detect_c3(spider, params);
  REQUIRE(c3);
  const Reduction red{*c3};
  const auto lists = ListAssignment::uniform(6, 21);
  auto partial = greedy_outside(spider, red.deletable(), lists, kTwo);
  // Give u a color the greedy rule would not keep.
  partial.assign(c3->u, 17);
  const auto done = extend_reduction(spider, partial, red, lists, kTwo, params);
  CHECK(validate_coloring(spider, done, lists, kTwo));
  CHECK(*done[c3->u] < 17);
}

TEST_CASE("extend a weak cluster") {
  // Hub 0 carrying ten chains a - t - b, a and b both on the hub. At
  // epsilon = 1/3 and k = 26: M = 18, so the hub (degree 20) stays out of
  // V1, it is heavy (k - M = 8), and ten size-2 components exceed 3 per
  // heavy vertex.
  std::vector<Edge> edges;
  Vertex next = 1;
  for (int c = 0; c < 10; ++c) {
    const Vertex a = next, t = next + 1, b = next + 2;
    next += 3;
    edges.insert(edges.end(), {{0, a}, {a, t}, {t, b}, {b, 0}});
  }
  const Graph g(next, edges);
  const Params params = Params::relaxed(Rational(1, 3), 26);
  const auto sets = compute_structure_sets(g, params);
  CHECK(!weak_structure_violation(g, sets, params));
  const auto cluster = find_weak_cluster(g, sets, params);
  REQUIRE(cluster);
  CHECK(cluster->u_prime == VertexSet{0});
  CHECK(cluster->components.size() == 10);
  CHECK(cluster->s_w_prime.size() == 20);
  CHECK(cluster->t_prime.size() == 10);
  CHECK(cluster->d_prime.edges.size() == 20);
  for (const auto& e : cluster->d_prime.edges) CHECK(e.payload.has_value());

  const Reduction red{*cluster};
  for (auto mode : {kTwo, kInj}) {
    const auto lists = ListAssignment::random(g.vertex_count(), mode == kTwo ? 27 : 26, 60, 5);
    const auto partial = greedy_outside(g, red.deletable(), lists, mode);
    const auto done = extend_reduction(g, partial, red, lists, mode, params);
    CHECK(validate_coloring(g, done, lists, mode));
  }
}

TEST_CASE("extension steps stay within their bounds across random recursions") {
  // The bound checks run inside extend_reduction; any excess throws.
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = gen_random_sparse(600, Rational(59, 20), 200, seed);
    const Params params = Params::make(Rational(1, 20), 1200);
    for (auto mode : {kTwo, kInj}) {
      const auto lists = ListAssignment::random(g.vertex_count(), mode == kTwo ? 1201 : 1200, 2402, seed);
      std::map<std::string, std::size_t> kinds;
      const auto coloring = color_sparse(g, lists, params, mode, &kinds);
      CHECK(validate_coloring(g, coloring, lists, mode));
      std::size_t steps = 0;
      for (const auto& [kind, count] : kinds) steps += count;
      CHECK(steps > 0);
    }
  }
}

TEST_CASE("color_sparse small cases and rejections") {
  const Params params = Params::make(Rational(1, 20), 1200);
  const auto empty = color_sparse(Graph(), ListAssignment::uniform(0, 1201), params, kTwo);
  CHECK(empty.vertex_count() == 0);

  const Graph tree(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {4, 5}});
  std::map<std::string, std::size_t> kinds;
  const auto lists = ListAssignment::random(6, 1201, 5000, 3);
  const auto colored = color_sparse(tree, lists, params, kTwo, &kinds);
  CHECK(validate_coloring(tree, colored, lists, kTwo));
  CHECK(kinds == std::map<std::string, std::size_t>{{"C1", 6}});

  CHECK_THROWS_AS(color_sparse(tree, ListAssignment::uniform(6, 1200), params, kTwo), RejectedInput);
  CHECK_NOTHROW(color_sparse(tree, ListAssignment::uniform(6, 1200), params, kInj));
  CHECK_THROWS_AS(color_sparse(tree, ListAssignment::uniform(5, 1201), params, kTwo), RejectedInput);
  CHECK_THROWS_AS(color_sparse(complete(4), ListAssignment::uniform(4, 1201), params, kTwo), RejectedInput);
  CHECK_THROWS_AS(color_sparse(tree, ListAssignment::uniform(6, 7), Params::relaxed(Rational(1, 2), 6), kTwo),
                  RejectedInput);
}

TEST_CASE("bipartite list edge coloring examples") {
  BipartiteMultigraph one;
  one.a_count = one.b_count = 1;
  one.edges = {{0, 0, std::nullopt}};
  CHECK(list_edge_color_bipartite(one, std::vector<ColorList>{{7}}) == std::vector<Color>{7});

  BipartiteMultigraph twin = one;
  twin.edges.push_back({0, 0, std::nullopt});
  const std::vector<ColorList> lists{{1, 2}, {1, 2}};
  const auto colors = list_edge_color_bipartite(twin, lists);
  CHECK(std::set<Color>(colors.begin(), colors.end()) == std::set<Color>{1, 2});

  CHECK_THROWS_AS(list_edge_color_bipartite(twin, std::vector<ColorList>{{1, 2}, {1}}), RejectedInput);
}

TEST_CASE("bipartite list edge coloring on tight random lists") {
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto d = testing::random_bipartite(6, 3, seed);
    const auto lists = tight_lists(d, seed % 6, rng);
    const auto colors = list_edge_color_bipartite(d, lists);
    CHECK(is_proper_list_edge_coloring(d, lists, colors));
    if (d.edges.size() <= 10) CHECK(list_edge_coloring_by_search(d, lists));
  }
}

TEST_CASE("is_proper_list_edge_coloring") {
  BipartiteMultigraph path;
  path.a_count = 2;
  path.b_count = 1;
  path.edges = {{0, 0, std::nullopt}, {1, 0, std::nullopt}};
  const std::vector<ColorList> lists{{1, 2}, {1, 2}};
  CHECK(is_proper_list_edge_coloring(path, lists, std::vector<Color>{1, 2}));
  CHECK(!is_proper_list_edge_coloring(path, lists, std::vector<Color>{1, 1}));
  CHECK(!is_proper_list_edge_coloring(path, lists, std::vector<Color>{1, 3}));
}

TEST_CASE("exact chromatic examples") {
  CHECK(exact_chromatic(gen_cycle(5), kTwo) == 5);
  CHECK(exact_chromatic(gen_gp(3), kTwo) == 5);
  CHECK(exact_chromatic(Graph(), kTwo) == 0);
  CHECK(exact_chromatic(Graph(3, {}), kInj) == 1);
  CHECK(exact_chromatic(complete(2), kInj) == 1);
  CHECK_THROWS_AS(exact_chromatic(gen_cycle(25), kTwo), SizeLimitExceeded);
}

TEST_CASE("exact chromatic matches plain backtracking") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Graph g = testing::random_graph(9, 0.2 + 0.05 * (seed % 5), seed);
    const std::size_t two = exact_chromatic(g, kTwo), inj = exact_chromatic(g, kInj);
    CHECK(two == testing::chromatic_by_backtracking(g, false));
    CHECK(inj == testing::chromatic_by_backtracking(g, true));
    CHECK(two >= g.max_degree() + 1);
    CHECK(inj <= two);
  }
}

TEST_CASE("exact chromatic on sparse graphs near the size limit") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = testing::random_subdivided(10, 0.4, 24, seed);
    CHECK(exact_chromatic(g, kTwo) >= g.max_degree() + 1);
    CHECK(exact_chromatic(g, kInj) <= exact_chromatic(g, kTwo));
  }
}

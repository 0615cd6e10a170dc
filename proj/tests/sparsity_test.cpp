#include <doctest.h>

#include "support.hpp"
#include "twodist/errors.hpp"
#include "twodist/families.hpp"
#include "twodist/sparsity.hpp"

using namespace twodist;

namespace {

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("rational canonical form") {
  const Rational r(6, -4);
  CHECK(r.str() == "-3/2");
  CHECK(r.denominator_str() == "2");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("7").is_integer());
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("mad on named graphs") {
  CHECK(mad_exact(gen_gp(3)) == Rational(16, 7));
  CHECK(mad_exact(gen_cycle(5)) == Rational(2));
  CHECK(mad_exact(complete(4)) == Rational(3));
  CHECK(mad_exact(Graph(1, {})) == Rational(0));
  CHECK(mad_exact(Graph()) == Rational(0));

  CHECK(mad_bruteforce(gen_gpc(3, 2)) == Rational(36, 13));
  const Graph tree(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {4, 5}});
  CHECK(mad_bruteforce(tree) == Rational(5, 3));
  CHECK(mad_bruteforce(Graph(1, {})) == Rational(0));
  CHECK_THROWS_AS(mad_bruteforce(gen_cycle(16)), SizeLimitExceeded);
}

TEST_CASE("mad agrees with subset enumeration") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 1 + seed % 11;
    const Graph g = testing::random_graph(n, 0.15 + 0.05 * (seed % 8), seed);
    const Rational expected = testing::mad_by_subsets(g);
    CHECK(mad_exact(g) == expected);
    CHECK(mad_bruteforce(g) == expected);
  }
}

TEST_CASE("densest subgraph attains mad") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = testing::random_graph(14, 0.25, seed);
    const VertexSet dense = densest_subgraph(g);
    if (g.edge_count() == 0) {
      CHECK(dense.empty());
      continue;
    }
    CHECK(average_degree(induced_subgraph(g, dense).graph) == mad_exact(g));
  }
}

TEST_CASE("mad is monotone under induced subgraphs and bounds the average degree") {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = testing::random_graph(20, 0.2, seed);
    const Rational whole = mad_exact(g);
    CHECK(whole >= average_degree(g));
    VertexSet kept;
    for (Vertex v = 0; v < 20; ++v)
      if (rng() % 2) kept.push_back(v);
    CHECK(mad_exact(induced_subgraph(g, kept).graph) <= whole);
  }
  // Vertex-transitive inputs: mad equals the average degree.
  for (std::size_t n = 3; n < 12; ++n) {
    CHECK(mad_exact(gen_cycle(n)) == average_degree(gen_cycle(n)));
    CHECK(mad_exact(complete(n)) == average_degree(complete(n)));
  }
}

TEST_CASE("mad on larger sparse graphs matches the generator's bound") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gen_random_sparse(400, Rational(59, 20), 50, seed);
    CHECK(mad_exact(g) < Rational(59, 20));
    CHECK(mad_exact(g) >= average_degree(g));
  }
}

TEST_CASE("girth") {
  CHECK(girth(gen_cycle(5)) == Girth::finite(5));
  CHECK(girth(gen_cycle(100)) == Girth::finite(100));
  CHECK(girth(Graph(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {4, 5}})).is_infinite());
  CHECK(girth(Graph(3, {})).is_infinite());
  CHECK(girth(complete(4)) == Girth::finite(3));
  for (std::size_t p = 2; p <= 6; ++p) CHECK(girth(gen_gp(p)) == Girth::finite(5));
  CHECK(Girth::infinite().str() == "infinity");
}

TEST_CASE("girth agrees with shortest cycle through BFS edge removal") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = testing::random_graph(12, 0.2, seed);
    // Shortest cycle through edge uv is 1 + dist(u, v) in g - uv.
    std::optional<std::size_t> best;
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::vector<Edge> rest = edges;
      rest.erase(rest.begin() + static_cast<long>(i));
      const auto dist = testing::bfs_distances(Graph(g.vertex_count(), rest), edges[i].first);
      if (dist[edges[i].second] != SIZE_MAX) {
        const std::size_t len = dist[edges[i].second] + 1;
        if (!best || len < *best) best = len;
      }
    }
    const Girth got = girth(g);
    if (best)
      CHECK(got == Girth::finite(*best));
    else
      CHECK(got.is_infinite());
  }
}

TEST_CASE("euler inequality") {
  for (std::size_t p = 2; p <= 6; ++p) {
    const Graph g = gen_gp(p);
    CHECK(euler_inequality_holds(mad_exact(g), girth(g)) == std::optional<bool>(true));
  }
  for (std::size_t n = 3; n <= 12; ++n) {
    const Graph g = gen_cycle(n);
    CHECK(euler_inequality_holds(mad_exact(g), girth(g)) == std::optional<bool>(true));
  }
  CHECK(euler_inequality_holds(Rational(5, 3), Girth::infinite()) == std::nullopt);
  // K_{4,4}: mad 4, girth 4, (4 - 2)(4 - 2) = 4.
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 4; ++a)
    for (Vertex b = 4; b < 8; ++b) edges.emplace_back(a, b);
  const Graph k44(8, edges);
  CHECK(euler_inequality_holds(mad_exact(k44), girth(k44)) == std::optional<bool>(false));
}

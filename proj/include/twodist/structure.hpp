#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twodist/bipartite.hpp"
#include "twodist/graph.hpp"
#include "twodist/rational.hpp"

namespace twodist {

// The numeric regime: epsilon, M = 6/epsilon and the degree bound k.
//
// `make` enforces 0 < epsilon <= 1/20 and k >= 3/epsilon^2. `relaxed` only
// requires epsilon > 0 and is meant for small hand-built gadgets; nothing
// guarantees the extension steps succeed under relaxed values.
class Params {
 public:
  static Params make(const Rational& epsilon, long long k);
  static Params relaxed(const Rational& epsilon, long long k);

  const Rational& epsilon() const { return epsilon_; }
  const Rational& big_m() const { return big_m_; }
  long long k() const { return k_; }
  bool strict() const { return strict_; }
  bool satisfies_invariants() const;

  // Integer forms of the degree thresholds, all derived exactly.
  bool at_most_m_minus_1(std::size_t d) const { return static_cast<long long>(d) <= m_minus_1_floor_; }
  bool at_most_m(std::size_t d) const { return static_cast<long long>(d) <= m_floor_; }
  bool at_least_m(std::size_t d) const { return static_cast<long long>(d) >= m_ceil_; }
  bool at_least_k_minus_m(std::size_t d) const { return static_cast<long long>(d) >= k_minus_m_ceil_; }
  // size < 1/epsilon
  bool below_inverse_epsilon(std::size_t s) const { return static_cast<long long>(s) < inv_eps_ceil_; }
  // d >= 1/epsilon
  bool at_least_inverse_epsilon(std::size_t d) const { return !below_inverse_epsilon(d); }
  // d(x) + d(y) <= k - M + 2
  bool c3_degree_sum_ok(std::size_t sum) const { return static_cast<long long>(sum) <= c3_sum_floor_; }

 private:
  Params(Rational epsilon, long long k, bool strict);
  Rational epsilon_;
  Rational big_m_;
  long long k_ = 0;
  bool strict_ = false;
  long long m_minus_1_floor_ = 0, m_floor_ = 0, m_ceil_ = 0, k_minus_m_ceil_ = 0, inv_eps_ceil_ = 0,
            c3_sum_floor_ = 0;
};

// w1 - u1 - u2 - w2 with d(u1) = d(u2) = 2, d(w1) <= k-1, d(w2) <= k-2.
struct C2Instance {
  Vertex w1, u1, u2, w2;
  friend bool operator==(const C2Instance&, const C2Instance&) = default;
};

// u with 3 <= d(u) <= M, 1-linked through v_i to w_i with d(w_i) <= M for
// d(u)-2 links, and remaining neighbors x, y with d(x)+d(y) <= k-M+2.
struct C3Instance {
  struct Link {
    Vertex v;
    Vertex w;
    friend bool operator==(const Link&, const Link&) = default;
  };
  Vertex u;
  std::vector<Link> links;
  Vertex x, y;
  friend bool operator==(const C3Instance&, const C3Instance&) = default;
};

struct StructureSets {
  std::vector<char> in_v1, in_v2, in_t;  // indicator per vertex
  // For each V1 vertex, the degree-2 neighbor playing v_1 (whose other end
  // need only have degree <= M-1).
  std::vector<std::optional<Vertex>> v1_witness;

  VertexSet v1() const;
  VertexSet v2() const;
  VertexSet t() const;
};

struct WeakComponent {
  VertexSet vertices;
  std::size_t size = 0;  // number of V1 vertices
  bool is_weak = false;
};

struct WeakStructure {
  std::vector<WeakComponent> components;  // all components of G[V1 u T]
  std::vector<std::size_t> small_weak;    // C_w: indices of weak components with size < 1/eps
  VertexSet s_w;                          // V2 vertices inside C_w members
  VertexSet u;                            // degree >= k-M with a neighbor in S_w
};

struct PeelResult {
  std::vector<std::size_t> a_kept;  // A' = N(B')
  std::vector<std::size_t> b_kept;  // B'
};

struct WeakCluster {
  std::vector<VertexSet> components;  // C'_w
  VertexSet s_w_prime;
  VertexSet t_prime;
  VertexSet u_prime;
  // A side indexes u_prime, B side indexes components; each edge's payload
  // is the S'_w vertex it stands for.
  BipartiteMultigraph d_prime;
};

struct Reduction {
  using C1 = Vertex;
  std::variant<C1, C2Instance, C3Instance, WeakCluster> value;

  std::string kind() const;
  // C1: {u}; C2: {u1, u2}; C3: {v_i}; cluster: S'_w u T'.
  VertexSet deletable() const;
};

std::optional<Vertex> detect_c1(const Graph& g);
std::optional<C2Instance> detect_c2(const Graph& g, const Params& params);
std::optional<C3Instance> detect_c3(const Graph& g, const Params& params);

StructureSets compute_structure_sets(const Graph& g, const Params& params);

// Applies one round of the V1 membership rule against `current`.
std::vector<char> v1_rule(const Graph& g, const Params& params, const std::vector<char>& current,
                          std::vector<std::optional<Vertex>>* witness = nullptr);

WeakStructure weak_components(const Graph& g, const StructureSets& sets, const Params& params);

// Repeatedly drops an A vertex of current degree < alpha together with its
// B-neighbors. Empty when B runs out.
std::optional<PeelResult> peel_dense_cluster(const BipartiteMultigraph& d, const Rational& alpha);

// The weak-cluster reduction, when |C_w| > (1/eps)*|{v : d(v) >= k-M}|.
// Requires the configuration-free shape (each S_w vertex has exactly one neighbor in U)
// and throws InternalInvariantFailure otherwise.
std::optional<WeakCluster> find_weak_cluster(const Graph& g, const StructureSets& sets, const Params& params);

// C1, C2, C3, then the weak cluster. Throws RejectedInput when params are
// not strict-valid or when max degree exceeds k.
std::optional<Reduction> find_reduction(const Graph& g, const Params& params);

// The three conclusions that hold on configuration-free graphs: every V1
// vertex has exactly one neighbor of degree >= k-M, V1 is stable, V1 and T
// are disjoint. Returns a description of the first violation, if any.
std::optional<std::string> weak_structure_violation(const Graph& g, const StructureSets& sets, const Params& params);

}  // namespace twodist

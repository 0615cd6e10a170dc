#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "twodist/graph.hpp"
#include "twodist/rational.hpp"

namespace twodist {

// Two hubs joined by one path of length 2 and p-1 paths of length 3.
// Vertices: hubs 0 and 1, path center 2, then the 2-link interiors.
Graph gen_gp(std::size_t p);

// Hub u (id 0) adjacent to x (id 1) and to v_1..v_p; x adjacent to
// w_1..w_c; a middle vertex between every v_i and w_j.
Graph gen_gpc(std::size_t p, std::size_t c);

// G_{p,C} as built has maximum degree p+1, one more than its nominal p. Returns
// a warning naming both values when they differ.
std::optional<std::string> gpc_delta_warning(std::size_t p, const Graph& g);

Graph gen_cycle(std::size_t n);

// n vertices, mad < mad_bound and max degree >= delta_min, deterministic per
// seed. Vertex 0 is not special: ids are shuffled. Throws RejectedInput on
// mad_bound >= 3 or delta_min >= n, GenerationFailure when the combination
// cannot be built.
Graph gen_random_sparse(std::size_t n, const Rational& mad_bound, std::size_t delta_min, std::uint64_t seed);

struct GpSpec {
  std::size_t p;
};
struct GpcSpec {
  std::size_t p, c;
};
struct CycleSpec {
  std::size_t n;
};
struct RandomSparseSpec {
  std::size_t n;
  Rational mad_bound;
  std::size_t delta_min;
  std::uint64_t seed;
};
using FamilySpec = std::variant<GpSpec, GpcSpec, CycleSpec, RandomSparseSpec>;

Graph generate(const FamilySpec& spec);

}  // namespace twodist

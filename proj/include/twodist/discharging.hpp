#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twodist/graph.hpp"
#include "twodist/rational.hpp"
#include "twodist/structure.hpp"

namespace twodist {

enum class Rule { R1, R2_1, R2_2_Outside, R2_2_IntoV1, R3, PotIn, PotOut };

std::string rule_name(Rule r);

// One weight movement. An empty endpoint is the common pot.
struct Transfer {
  std::optional<Vertex> from;
  std::optional<Vertex> to;
  Rational amount;
  Rule rule;
};

struct WeightLedger {
  std::vector<Rational> initial;  // d(v) - 3 + eps
  std::vector<Rational> final;    // after all transfers; pot payouts land on the component's lowest vertex
  std::vector<Transfer> transfers;  // sorted by (from, to, rule)
  Rational pot_in;
  Rational pot_out;
  std::vector<WeakComponent> components;  // components of G[V1 u T]
  std::vector<Rational> component_totals;
  // Audit tags: which branch of the weight analysis each vertex / component
  // falls in ("deg2:a", "mid:q<=d-3", "hub", "weak,s<1/eps", ...). Empty for
  // vertices that belong to a component.
  std::vector<std::string> vertex_case;
  std::vector<std::string> component_case;
  std::size_t heavy_count = 0;       // |{v : d(v) >= k-M}|
  std::size_t small_weak_count = 0;  // |C_w|
};

struct Verdict {
  enum class Kind { Certified, NegativeVertex, NegativeComponent, NegativePot };
  Kind kind = Kind::Certified;
  std::optional<Vertex> vertex;
  std::optional<std::size_t> component;
  Rational value;  // the offending weight (or pot balance)

  bool certified() const { return kind == Kind::Certified; }
  std::string describe() const;
};

WeightLedger apply_discharging(const Graph& g, const StructureSets& sets, const Params& params);

// Certified iff every vertex outside V1 u T ends non-negative, every
// component of G[V1 u T] has non-negative total, and the pot obligation
// |C_w| <= (1/eps)*|{v : d(v) >= k-M}| holds. Certification implies
// sum_v (d(v) - 3 + eps) >= 0.
Verdict verify_nonnegativity(const WeightLedger& ledger, const Graph& g, const StructureSets& sets,
                             const Params& params);

}  // namespace twodist

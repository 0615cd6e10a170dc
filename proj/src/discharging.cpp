#include "twodist/discharging.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace twodist {

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::R1: return "R1";
    case Rule::R2_1: return "R2.1";
    case Rule::R2_2_Outside: return "R2.2";
    case Rule::R2_2_IntoV1: return "R2.2v1";
    case Rule::R3: return "R3";
    case Rule::PotIn: return "Rg.in";
    case Rule::PotOut: return "Rg.out";
  }
  return "?";
}

std::string Verdict::describe() const {
  switch (kind) {
    case Kind::Certified: return "certified";
    case Kind::NegativeVertex: return "negative vertex " + std::to_string(*vertex) + " (" + value.str() + ")";
    case Kind::NegativeComponent:
      return "negative component " + std::to_string(*component) + " (" + value.str() + ")";
    case Kind::NegativePot: return "negative pot (" + value.str() + ")";
  }
  return "?";
}

namespace {

std::string vertex_case(const Graph& g, Vertex x, const StructureSets& sets, const Params& params) {
  const std::size_t d = g.degree(x);
  if (d <= 1) return "deg<=1";
  if (d == 2) {
    const auto nb = g.neighbors(x);
    return params.at_least_m(g.degree(nb[0])) || params.at_least_m(g.degree(nb[1])) ? "deg2:a" : "deg2:b";
  }
  if (params.at_most_m_minus_1(d)) {
    std::size_t q = 0, p = 0;
    for (Vertex a : g.neighbors(x)) {
      if (g.degree(a) != 2) continue;
      const Vertex y = g.other_neighbor(a, x);
      if (params.at_most_m_minus_1(g.degree(y))) ++q;
      if (sets.in_v1[y]) ++p;
    }
    if (q + 3 <= d) return "mid:q<=d-3";
    if (p + 3 <= d) return "mid:q>=d-2,p<=d-3";
    return "mid:p>=d-2";
  }
  if (params.at_least_k_minus_m(d)) return "hub";
  if (params.at_least_m(d)) return "high";
  return "between:M-1<d<M";
}

}  // namespace

WeightLedger apply_discharging(const Graph& g, const StructureSets& sets, const Params& params) {
  const std::size_t n = g.vertex_count();
  const Rational& eps = params.epsilon();
  WeightLedger ledger;
  ledger.initial.reserve(n);
  for (Vertex v = 0; v < n; ++v) ledger.initial.push_back(Rational(static_cast<long long>(g.degree(v)) - 3) + eps);

  const Rational half_eps = eps / 2;
  const Rational r21 = Rational(1) - Rational(3) * eps / 2;
  const Rational r22_out = (Rational(1) - eps) / 2;
  const Rational r22_in = Rational(1) - eps;
  const Rational r3 = Rational(1) - eps / 2;
  const Rational inv_eps = Rational(1) / eps;

  std::set<std::pair<Vertex, Vertex>> r1_pairs;
  for (Vertex x = 0; x < n; ++x) {
    const std::size_t d = g.degree(x);
    if (d == 2) {
      const auto nb = g.neighbors(x);
      for (int side = 0; side < 2; ++side) {
        const Vertex a = nb[side], b = nb[1 - side];
        if (g.degree(a) != 2 || !params.at_least_m(g.degree(b))) continue;
        if (sets.in_v1[g.other_neighbor(a, x)]) continue;
        if (r1_pairs.insert({x, a}).second) ledger.transfers.push_back({x, a, half_eps, Rule::R1});
      }
    }
    if (d >= 3 && params.at_most_m_minus_1(d) && !sets.in_v1[x]) {
      for (Vertex a : g.neighbors(x)) {
        if (g.degree(a) != 2) continue;
        const Vertex y = g.other_neighbor(a, x);
        const std::size_t dy = g.degree(y);
        if (dy == 2) {
          ledger.transfers.push_back({x, a, r21, Rule::R2_1});
        } else if (dy >= 3 && !params.at_least_m(dy)) {
          if (sets.in_v1[y])
            ledger.transfers.push_back({x, a, r22_in, Rule::R2_2_IntoV1});
          else
            ledger.transfers.push_back({x, a, r22_out, Rule::R2_2_Outside});
        }
      }
    }
    if (params.at_least_m(d))
      for (Vertex a : g.neighbors(x)) ledger.transfers.push_back({x, a, r3, Rule::R3});
    if (params.at_least_k_minus_m(d)) {
      ledger.transfers.push_back({x, std::nullopt, inv_eps, Rule::PotIn});
      ledger.pot_in += inv_eps;
      ++ledger.heavy_count;
    }
  }

  const WeakStructure ws = weak_components(g, sets, params);
  ledger.small_weak_count = ws.small_weak.size();
  for (std::size_t idx : ws.small_weak) {
    const Vertex rep = ws.components[idx].vertices.front();
    ledger.transfers.push_back({std::nullopt, rep, Rational(1), Rule::PotOut});
    ledger.pot_out += 1;
  }

  std::sort(ledger.transfers.begin(), ledger.transfers.end(), [](const Transfer& a, const Transfer& b) {
    return std::tie(a.from, a.to, a.rule) < std::tie(b.from, b.to, b.rule);
  });

  ledger.final = ledger.initial;
  for (const auto& t : ledger.transfers) {
    if (t.from) ledger.final[*t.from] -= t.amount;
    if (t.to) ledger.final[*t.to] += t.amount;
  }

  std::vector<char> in_structure(n, 0);
  ledger.components = ws.components;
  for (std::size_t i = 0; i < ws.components.size(); ++i) {
    const auto& c = ws.components[i];
    Rational total;
    for (Vertex v : c.vertices) {
      total += ledger.final[v];
      in_structure[v] = 1;
    }
    ledger.component_totals.push_back(total);
    if (c.size == 1 && c.vertices.size() == 1)
      ledger.component_case.push_back("s=1");
    else if (c.is_weak && params.below_inverse_epsilon(c.size))
      ledger.component_case.push_back("weak,s<1/eps");
    else if (c.is_weak)
      ledger.component_case.push_back("weak,s>=1/eps");
    else
      ledger.component_case.push_back("non-weak");
  }
  ledger.vertex_case.resize(n);
  for (Vertex v = 0; v < n; ++v)
    if (!in_structure[v]) ledger.vertex_case[v] = vertex_case(g, v, sets, params);
  return ledger;
}

Verdict verify_nonnegativity(const WeightLedger& ledger, const Graph& g, const StructureSets& sets,
                             const Params& params) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (sets.in_v1[v] || sets.in_t[v]) continue;
    if (ledger.final[v].sign() < 0) return {Verdict::Kind::NegativeVertex, v, std::nullopt, ledger.final[v]};
  }
  for (std::size_t i = 0; i < ledger.component_totals.size(); ++i)
    if (ledger.component_totals[i].sign() < 0)
      return {Verdict::Kind::NegativeComponent, std::nullopt, i, ledger.component_totals[i]};
  // The pot obligation itself, not only the pot arithmetic.
  const Rational allowance = Rational(static_cast<long long>(ledger.heavy_count)) / params.epsilon();
  const Rational balance = ledger.pot_in - ledger.pot_out;
  if (Rational(static_cast<long long>(ledger.small_weak_count)) > allowance || balance.sign() < 0)
    return {Verdict::Kind::NegativePot, std::nullopt, std::nullopt, balance};
  return {};
}

}  // namespace twodist

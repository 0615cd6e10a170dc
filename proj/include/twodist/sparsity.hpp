#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "twodist/graph.hpp"
#include "twodist/rational.hpp"

namespace twodist {

// Shortest cycle length; forests have infinite girth.
class Girth {
 public:
  static Girth infinite() { return Girth(); }
  static Girth finite(std::size_t length) { return Girth(length); }

  bool is_infinite() const { return !length_; }
  std::size_t length() const { return length_.value(); }
  std::string str() const { return length_ ? std::to_string(*length_) : "infinity"; }

  friend bool operator==(const Girth&, const Girth&) = default;

 private:
  Girth() = default;
  explicit Girth(std::size_t len) : length_(len) {}
  std::optional<std::size_t> length_;
};

// 2|E|/|V|; zero for the empty graph.
Rational average_degree(const Graph& g);

// Maximum average degree over all nonempty subgraphs, computed exactly by a
// min-cut density test inside a rational binary search. Zero when edgeless.
Rational mad_exact(const Graph& g);

// Same value by enumerating all induced subsets; n <= 15, otherwise
// throws SizeLimitExceeded.
Rational mad_bruteforce(const Graph& g);
inline constexpr std::size_t kMadBruteforceLimit = 15;

// Vertices of a densest subgraph (maximizing |E(H)|/|V(H)|); empty when edgeless.
VertexSet densest_subgraph(const Graph& g);

Girth girth(const Graph& g);

// (mad - 2)(girth - 2) < 4, the inequality every planar graph satisfies.
// Empty for forests, where the inequality is not applicable.
std::optional<bool> euler_inequality_holds(const Rational& mad, const Girth& g);

}  // namespace twodist

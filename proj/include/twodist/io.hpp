#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "twodist/coloring.hpp"
#include "twodist/discharging.hpp"
#include "twodist/graph.hpp"
#include "twodist/structure.hpp"

namespace twodist {

// Edge list: one "u v" pair per line, 0-indexed, '#' starts a comment. The
// comment "# vertices: N" fixes n; otherwise n = largest id + 1.
// DIMACS: "p edge n m" then "e u v" lines, 1-indexed, 'c' comment lines.
// Auto picks DIMACS when the first content line starts with 'p' or 'c'.
enum class GraphFormat { Auto, EdgeList, Dimacs };

struct ParsedGraph {
  Graph graph;
  std::vector<std::string> warnings;  // duplicate edges, with line numbers
};

// Throws ParseError (with the offending 1-based line) on malformed lines,
// out-of-range ids and self-loops. Duplicate edges are merged with a warning.
ParsedGraph parse_graph(std::istream& in, GraphFormat format = GraphFormat::Auto);
ParsedGraph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

// "# vertices: N" followed by the edges in order; parses back to the same graph.
std::string emit_edge_list(const Graph& g);

// Fill colors cycle through a fixed palette by color id.
std::string emit_dot(const Graph& g, const PartialColoring* coloring = nullptr);
inline constexpr std::size_t kDotPaletteSize = 12;
std::string dot_color(Color c);

// Either an array of arrays (entry v is L(v)) or an object mapping vertex ids
// to arrays. Every vertex 0..n-1 must be covered. Throws RejectedInput.
ListAssignment parse_lists_json(std::string_view text, std::size_t n);

nlohmann::json coloring_json(const PartialColoring& coloring);
nlohmann::json reduction_json(const Reduction& red);
nlohmann::json ledger_json(const WeightLedger& ledger, const Verdict& verdict);

}  // namespace twodist

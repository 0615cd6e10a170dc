#include "twodist/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "twodist/errors.hpp"

namespace twodist {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::size_t to_index(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return value;
}

struct RawEdge {
  Vertex u, v;
  std::size_t line;
};

ParsedGraph assemble(std::size_t n, const std::vector<RawEdge>& raw) {
  ParsedGraph out;
  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (const auto& e : raw) {
    if (e.u >= n || e.v >= n) throw ParseError(e.line, "vertex id out of range (n = " + std::to_string(n) + ")");
    if (e.u == e.v) throw ParseError(e.line, "self-loop at vertex " + std::to_string(e.u));
    const Edge key{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (!seen.insert(key).second) {
      out.warnings.push_back("line " + std::to_string(e.line) + ": duplicate edge " + std::to_string(key.first) +
                             " " + std::to_string(key.second) + " ignored");
      continue;
    }
    edges.push_back(key);
  }
  out.graph = Graph(n, edges);
  return out;
}

ParsedGraph parse_edge_list(const std::vector<std::string>& lines) {
  std::optional<std::size_t> declared;
  std::size_t n = 0;
  std::vector<RawEdge> raw;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line = i + 1;
    std::string_view s = trim(lines[i]);
    if (const auto hash = s.find('#'); hash != std::string_view::npos) {
      const std::string_view comment = trim(s.substr(hash + 1));
      constexpr std::string_view kDirective = "vertices:";
      if (comment.substr(0, kDirective.size()) == kDirective)
        declared = to_index(trim(comment.substr(kDirective.size())), line);
      s = trim(s.substr(0, hash));
    }
    if (s.empty()) continue;
    const auto tok = tokens(s);
    if (tok.size() != 2) throw ParseError(line, "expected 'u v'");
    const Vertex u = to_index(tok[0], line), v = to_index(tok[1], line);
    raw.push_back({u, v, line});
    n = std::max(n, std::max(u, v) + 1);
  }
  return assemble(declared.value_or(n), raw);
}

ParsedGraph parse_dimacs(const std::vector<std::string>& lines) {
  std::optional<std::size_t> n;
  std::vector<RawEdge> raw;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line = i + 1;
    const std::string_view s = trim(lines[i]);
    if (s.empty() || s[0] == 'c') continue;
    const auto tok = tokens(s);
    if (tok[0] == "p") {
      if (n) throw ParseError(line, "second problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) throw ParseError(line, "expected 'p edge n m'");
      n = to_index(tok[2], line);
      to_index(tok[3], line);
    } else if (tok[0] == "e") {
      if (!n) throw ParseError(line, "edge before the problem line");
      if (tok.size() != 3) throw ParseError(line, "expected 'e u v'");
      const std::size_t u = to_index(tok[1], line), v = to_index(tok[2], line);
      if (u == 0 || v == 0 || u > *n || v > *n)
        throw ParseError(line, "vertex id out of range 1.." + std::to_string(*n));
      raw.push_back({u - 1, v - 1, line});
    } else {
      throw ParseError(line, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!n) throw ParseError(lines.size(), "missing problem line 'p edge n m'");
  return assemble(*n, raw);
}

}  // namespace

ParsedGraph parse_graph(std::istream& in, GraphFormat format) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  if (format == GraphFormat::Auto) {
    format = GraphFormat::EdgeList;
    for (const auto& l : lines) {
      const std::string_view s = trim(l);
      if (s.empty() || s[0] == '#') continue;
      if (s[0] == 'p' || s[0] == 'c') format = GraphFormat::Dimacs;
      break;
    }
  }
  return format == GraphFormat::Dimacs ? parse_dimacs(lines) : parse_edge_list(lines);
}

ParsedGraph parse_graph(std::string_view text, GraphFormat format) {
  std::istringstream in{std::string(text)};
  return parse_graph(in, format);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# vertices: " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::string dot_color(Color c) {
  static constexpr const char* kPalette[kDotPaletteSize] = {
      "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
      "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff"};
  const auto size = static_cast<Color>(kDotPaletteSize);
  return kPalette[((c % size) + size) % size];
}

std::string emit_dot(const Graph& g, const PartialColoring* coloring) {
  std::ostringstream out;
  out << "graph G {\n";
  if (coloring) out << "  node [style=filled];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (coloring && (*coloring)[v])
      out << " [label=\"" << v << ":" << *(*coloring)[v] << "\", fillcolor=\"" << dot_color(*(*coloring)[v]) << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

ListAssignment parse_lists_json(std::string_view text, std::size_t n) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw RejectedInput(std::string("lists: invalid JSON: ") + e.what());
  }
  std::vector<std::optional<ColorList>> lists(n);
  auto read_list = [&](const nlohmann::json& arr, std::size_t v) {
    if (!arr.is_array()) throw RejectedInput("lists: entry for vertex " + std::to_string(v) + " is not an array");
    ColorList l;
    for (const auto& c : arr) {
      if (!c.is_number_integer()) throw RejectedInput("lists: non-integer color for vertex " + std::to_string(v));
      l.push_back(c.get<Color>());
    }
    return l;
  };
  if (doc.is_array()) {
    if (doc.size() != n)
      throw RejectedInput("lists: expected " + std::to_string(n) + " entries, got " + std::to_string(doc.size()));
    for (std::size_t v = 0; v < n; ++v) lists[v] = read_list(doc[v], v);
  } else if (doc.is_object()) {
    for (const auto& [key, value] : doc.items()) {
      std::size_t v = 0;
      const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
      if (ec != std::errc() || ptr != key.data() + key.size() || v >= n)
        throw RejectedInput("lists: bad vertex key '" + key + "'");
      lists[v] = read_list(value, v);
    }
  } else {
    throw RejectedInput("lists: expected an array or an object");
  }
  std::vector<ColorList> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (!lists[v]) throw RejectedInput("lists: no list for vertex " + std::to_string(v));
    out.push_back(std::move(*lists[v]));
  }
  return ListAssignment(std::move(out));
}

nlohmann::json coloring_json(const PartialColoring& coloring) {
  nlohmann::json out = nlohmann::json::object();
  for (Vertex v = 0; v < coloring.vertex_count(); ++v)
    if (coloring[v]) out[std::to_string(v)] = *coloring[v];
  return out;
}

nlohmann::json reduction_json(const Reduction& red) {
  nlohmann::json out;
  out["kind"] = red.kind();
  out["deletable"] = red.deletable();
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Reduction::C1>) {
          out["u"] = r;
        } else if constexpr (std::is_same_v<T, C2Instance>) {
          out["w1"] = r.w1;
          out["u1"] = r.u1;
          out["u2"] = r.u2;
          out["w2"] = r.w2;
        } else if constexpr (std::is_same_v<T, C3Instance>) {
          out["u"] = r.u;
          out["x"] = r.x;
          out["y"] = r.y;
          nlohmann::json links = nlohmann::json::array();
          for (const auto& l : r.links) links.push_back({{"v", l.v}, {"w", l.w}});
          out["links"] = links;
        } else {
          out["components"] = r.components;
          out["s_w_prime"] = r.s_w_prime;
          out["t_prime"] = r.t_prime;
          out["u_prime"] = r.u_prime;
          nlohmann::json edges = nlohmann::json::array();
          for (const auto& e : r.d_prime.edges)
            edges.push_back({{"u", r.u_prime.at(e.a)}, {"component", e.b}, {"vertex", e.payload.value()}});
          out["d_prime_edges"] = edges;
        }
      },
      red.value);
  return out;
}

nlohmann::json ledger_json(const WeightLedger& ledger, const Verdict& verdict) {
  nlohmann::json out;
  nlohmann::json vertices = nlohmann::json::array();
  Rational initial_sum, final_sum;
  for (Vertex v = 0; v < ledger.initial.size(); ++v) {
    nlohmann::json entry{{"vertex", v}, {"initial", ledger.initial[v].str()}, {"final", ledger.final[v].str()}};
    if (!ledger.vertex_case[v].empty()) entry["case"] = ledger.vertex_case[v];
    vertices.push_back(entry);
    initial_sum += ledger.initial[v];
    final_sum += ledger.final[v];
  }
  out["vertices"] = vertices;
  nlohmann::json transfers = nlohmann::json::array();
  for (const auto& t : ledger.transfers) {
    nlohmann::json entry{{"amount", t.amount.str()}, {"rule", rule_name(t.rule)}};
    entry["from"] = t.from ? nlohmann::json(*t.from) : nlohmann::json("pot");
    entry["to"] = t.to ? nlohmann::json(*t.to) : nlohmann::json("pot");
    transfers.push_back(entry);
  }
  out["transfers"] = transfers;
  nlohmann::json components = nlohmann::json::array();
  for (std::size_t i = 0; i < ledger.components.size(); ++i) {
    const auto& c = ledger.components[i];
    components.push_back({{"vertices", c.vertices},
                          {"size", c.size},
                          {"weak", c.is_weak},
                          {"total", ledger.component_totals[i].str()},
                          {"case", ledger.component_case[i]}});
  }
  out["components"] = components;
  out["pot"] = {{"in", ledger.pot_in.str()},
                {"out", ledger.pot_out.str()},
                {"heavy_vertices", ledger.heavy_count},
                {"small_weak_components", ledger.small_weak_count}};
  out["sum_initial"] = initial_sum.str();
  out["sum_final"] = final_sum.str();
  out["conserved"] = final_sum + ledger.pot_in - ledger.pot_out == initial_sum;
  nlohmann::json v{{"kind", verdict.certified() ? "certified" : "negative"}, {"description", verdict.describe()}};
  if (verdict.vertex) v["vertex"] = *verdict.vertex;
  if (verdict.component) v["component"] = *verdict.component;
  if (!verdict.certified()) v["value"] = verdict.value.str();
  out["verdict"] = v;
  return out;
}

}  // namespace twodist

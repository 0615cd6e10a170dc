// Command-line front end: graph statistics, coloring, structure detection,
// discharging reports and graph generators.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "twodist/coloring.hpp"
#include "twodist/discharging.hpp"
#include "twodist/errors.hpp"
#include "twodist/families.hpp"
#include "twodist/io.hpp"
#include "twodist/sparsity.hpp"
#include "twodist/structure.hpp"

namespace {

using namespace twodist;

struct Options {
  std::string input;  // empty or "-" reads stdin
  std::string graph_format = "auto";
  std::string format = "text";
  std::string out;
  std::string epsilon = "1/20";
  std::optional<long long> k;
  std::string mode = "two-distance";
  std::string lists;
  std::optional<std::uint64_t> seed;
  std::size_t p = 0, c = 0, n = 0, delta_min = 0;
  std::string mad_bound = "59/20";
};

class UsageError : public RejectedInput {
 public:
  using RejectedInput::RejectedInput;
};

ConflictMode parse_mode(const std::string& s) {
  if (s == "two-distance") return ConflictMode::TwoDistance;
  if (s == "injective") return ConflictMode::Injective;
  throw UsageError("unknown mode '" + s + "'");
}

std::string mode_name(ConflictMode m) { return m == ConflictMode::TwoDistance ? "two-distance" : "injective"; }

ParsedGraph read_graph(const Options& o) {
  GraphFormat fmt = GraphFormat::Auto;
  if (o.graph_format == "edge-list") fmt = GraphFormat::EdgeList;
  else if (o.graph_format == "dimacs") fmt = GraphFormat::Dimacs;
  ParsedGraph parsed;
  if (o.input.empty() || o.input == "-") {
    parsed = parse_graph(std::cin, fmt);
  } else {
    std::ifstream in(o.input);
    if (!in) throw RejectedInput("cannot open " + o.input);
    parsed = parse_graph(in, fmt);
  }
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
  return parsed;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RejectedInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out);
  if (!out) throw RejectedInput("cannot write " + o.out);
  out << text;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed, const char* command) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw UsageError(std::string("format '") + o.format + "' is not supported by " + command);
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

Params make_params(const Options& o, const Graph& g) {
  const Rational eps = Rational::parse(o.epsilon);
  if (eps.sign() <= 0) throw RejectedInput("epsilon must be positive");
  const long long k = o.k ? *o.k
                          : std::max(static_cast<long long>(g.max_degree()), (Rational(3) / (eps * eps)).ceil());
  return Params::make(eps, k);
}

std::string graph_output(const Options& o, const Graph& g) {
  require_format(o, {"text", "json", "dot"}, "graph output");
  if (o.format == "dot") return emit_dot(g);
  if (o.format == "json") return json_text({{"vertices", g.vertex_count()}, {"edges", g.edges()}});
  return emit_edge_list(g);
}

void cmd_mad(const Options& o) {
  require_format(o, {"text", "json"}, "mad");
  const Rational mad = mad_exact(read_graph(o).graph);
  emit(o, o.format == "json" ? json_text({{"mad", mad.str()}}) : mad.str() + "\n");
}

void cmd_girth(const Options& o) {
  require_format(o, {"text", "json"}, "girth");
  const Girth g = girth(read_graph(o).graph);
  emit(o, o.format == "json" ? json_text({{"girth", g.str()}}) : g.str() + "\n");
}

void cmd_square(const Options& o) { emit(o, graph_output(o, square(read_graph(o).graph))); }

void cmd_chi2(const Options& o) {
  require_format(o, {"text", "json"}, "chi2");
  const ConflictMode mode = parse_mode(o.mode);
  const std::size_t chi = exact_chromatic(read_graph(o).graph, mode);
  emit(o, o.format == "json" ? json_text({{"chromatic_number", chi}, {"mode", mode_name(mode)}})
                             : std::to_string(chi) + "\n");
}

void cmd_color(const Options& o) {
  require_format(o, {"text", "json", "dot"}, "color");
  const ConflictMode mode = parse_mode(o.mode);
  const Graph g = read_graph(o).graph;
  const Params params = make_params(o, g);
  const std::size_t size = static_cast<std::size_t>(mode == ConflictMode::TwoDistance ? params.k() + 1 : params.k());
  ListAssignment lists;
  if (!o.lists.empty())
    lists = parse_lists_json(read_file(o.lists), g.vertex_count());
  else if (o.seed)
    lists = ListAssignment::random(g.vertex_count(), size, 2 * static_cast<std::size_t>(params.k() + 1), *o.seed);
  else
    lists = ListAssignment::uniform(g.vertex_count(), size);
  std::map<std::string, std::size_t> kinds;
  const PartialColoring coloring = color_sparse(g, lists, params, mode, &kinds);
  if (!validate_coloring(g, coloring, lists, mode))
    throw InternalInvariantFailure("produced coloring failed validation");
  if (o.format == "dot") {
    emit(o, emit_dot(g, &coloring));
  } else if (o.format == "json") {
    std::set<Color> used;
    for (Vertex v = 0; v < g.vertex_count(); ++v) used.insert(*coloring[v]);
    emit(o, json_text({{"coloring", coloring_json(coloring)},
                       {"colors_used", used.size()},
                       {"k", params.k()},
                       {"mode", mode_name(mode)},
                       {"reductions", kinds},
                       {"valid", true}}));
  } else {
    std::ostringstream out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << v << " " << *coloring[v] << "\n";
    emit(o, out.str());
  }
}

std::string reduction_text(const Reduction& red) {
  std::ostringstream out;
  const auto j = reduction_json(red);
  out << red.kind();
  for (const char* key : {"u", "w1", "u1", "u2", "w2", "x", "y"})
    if (j.contains(key)) out << " " << key << "=" << j[key].get<std::size_t>();
  if (const auto* c3 = std::get_if<C3Instance>(&red.value))
    for (const auto& l : c3->links) out << " link=" << l.v << "/" << l.w;
  if (const auto* cl = std::get_if<WeakCluster>(&red.value))
    out << " components=" << cl->components.size() << " s_w'=" << cl->s_w_prime.size()
        << " t'=" << cl->t_prime.size() << " u'=" << cl->u_prime.size();
  out << "\n";
  return out.str();
}

void cmd_detect(const Options& o) {
  require_format(o, {"text", "json"}, "detect");
  const Graph g = read_graph(o).graph;
  const auto red = find_reduction(g, make_params(o, g));
  if (o.format == "json")
    emit(o, json_text(red ? reduction_json(*red) : nlohmann::json{{"kind", "none"}}));
  else
    emit(o, red ? reduction_text(*red) : "none\n");
}

void cmd_discharge(const Options& o) {
  require_format(o, {"text", "json"}, "discharge");
  const Graph g = read_graph(o).graph;
  const Params params = make_params(o, g);
  const StructureSets sets = compute_structure_sets(g, params);
  const WeightLedger ledger = apply_discharging(g, sets, params);
  const Verdict verdict = verify_nonnegativity(ledger, g, sets, params);
  const auto j = ledger_json(ledger, verdict);
  if (o.format == "json") {
    emit(o, json_text(j));
  } else {
    std::ostringstream out;
    out << verdict.describe() << "\n"
        << "sum initial " << j["sum_initial"].get<std::string>() << ", sum final "
        << j["sum_final"].get<std::string>() << ", pot in " << ledger.pot_in << ", pot out " << ledger.pot_out
        << "\n";
    emit(o, out.str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-distance and injective list coloring of sparse graphs"};
  app.require_subcommand(1);
  Options o;

  auto graph_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "graph file (default: stdin)");
    sub->add_option("--graph-format", o.graph_format, "input format")
        ->check(CLI::IsMember({"auto", "edge-list", "dimacs"}));
  };
  auto output = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", o.out, "write output to a file");
  };
  auto params = [&](CLI::App* sub) {
    sub->add_option("--epsilon", o.epsilon, "epsilon as a/b (default 1/20)");
    sub->add_option("--k", o.k, "degree bound (default max(Delta, ceil(3/epsilon^2)))");
  };

  auto* mad = app.add_subcommand("mad", "exact maximum average degree");
  graph_input(mad);
  output(mad, {"text", "json", "dot"});
  auto* gir = app.add_subcommand("girth", "shortest cycle length");
  graph_input(gir);
  output(gir, {"text", "json", "dot"});
  auto* sq = app.add_subcommand("square", "square of the graph");
  graph_input(sq);
  output(sq, {"text", "json", "dot"});
  auto* chi = app.add_subcommand("chi2", "exact chromatic number of the square (or injective conflict graph)");
  graph_input(chi);
  output(chi, {"text", "json", "dot"});
  chi->add_option("--mode", o.mode)->check(CLI::IsMember({"two-distance", "injective"}));
  auto* color = app.add_subcommand("color", "list coloring of the square of a sparse graph");
  graph_input(color);
  output(color, {"text", "json", "dot"});
  params(color);
  color->add_option("--mode", o.mode)->check(CLI::IsMember({"two-distance", "injective"}));
  color->add_option("--lists", o.lists, "JSON list assignment");
  color->add_option("--seed", o.seed, "random lists from this seed when --lists is absent");
  auto* detect = app.add_subcommand("detect", "first reducible configuration, or none");
  graph_input(detect);
  output(detect, {"text", "json", "dot"});
  params(detect);
  auto* discharge = app.add_subcommand("discharge", "discharging ledger and verdict");
  graph_input(discharge);
  output(discharge, {"text", "json", "dot"});
  params(discharge);

  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->require_subcommand(1);
  auto* gen_gp_cmd = gen->add_subcommand("gp", "two hubs, one 1-link and p-1 2-links");
  gen_gp_cmd->add_option("--p", o.p)->required();
  auto* gen_gpc_cmd = gen->add_subcommand("gpc", "the G_{p,C} construction");
  gen_gpc_cmd->add_option("--p", o.p)->required();
  gen_gpc_cmd->add_option("--c", o.c)->required();
  auto* gen_cycle_cmd = gen->add_subcommand("cycle", "cycle on n vertices");
  gen_cycle_cmd->add_option("--n", o.n)->required();
  auto* gen_random_cmd = gen->add_subcommand("random", "random sparse graph");
  gen_random_cmd->add_option("--n", o.n)->required();
  gen_random_cmd->add_option("--mad", o.mad_bound, "strict upper bound on mad, a/b (default 59/20)");
  gen_random_cmd->add_option("--delta-min", o.delta_min, "minimum max degree");
  gen_random_cmd->add_option("--seed", o.seed);
  for (auto* sub : {gen_gp_cmd, gen_gpc_cmd, gen_cycle_cmd, gen_random_cmd}) output(sub, {"text", "json", "dot"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*mad) cmd_mad(o);
    else if (*gir) cmd_girth(o);
    else if (*sq) cmd_square(o);
    else if (*chi) cmd_chi2(o);
    else if (*color) cmd_color(o);
    else if (*detect) cmd_detect(o);
    else if (*discharge) cmd_discharge(o);
    else if (*gen_gp_cmd) emit(o, graph_output(o, gen_gp(o.p)));
    else if (*gen_gpc_cmd) {
      const Graph g = gen_gpc(o.p, o.c);
      if (const auto w = gpc_delta_warning(o.p, g)) std::cerr << *w << "\n";
      emit(o, graph_output(o, g));
    } else if (*gen_cycle_cmd) emit(o, graph_output(o, gen_cycle(o.n)));
    else if (*gen_random_cmd)
      emit(o, graph_output(o, gen_random_sparse(o.n, Rational::parse(o.mad_bound), o.delta_min, o.seed.value_or(1))));
  } catch (const RejectedInput& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

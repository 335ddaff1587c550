#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dot.hpp"
#include "susy/json_io.hpp"

namespace susy::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_labels(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Json read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
  }
  return read_json_file(path);
}

std::filesystem::path base_dir(const std::string& path) {
  if (path == "-") return std::filesystem::current_path();
  return std::filesystem::path(path).parent_path();
}

std::string join(const std::set<std::string>& items) {
  if (items.empty()) return "-";
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ",") + s;
  return out;
}

std::string graph_table(const SusyGraph& g) {
  std::ostringstream os;
  os << "vertices " << g.graph.vertices.size() << "  edges " << edges(g.graph).size() << "  tails "
     << tails(g.graph).size() << (g.modular ? "  modular" : "") << "\n";
  std::map<FlagId, Label> label_of;
  for (const auto& [l, f] : g.labeling.ns_tail_labels) label_of.emplace(f, l);
  for (const auto& [l, f] : g.labeling.r_tail_labels) label_of.emplace(f, l);
  for (const auto& [v, flags] : flags_by_vertex(g.graph)) {
    std::set<std::string> ns, r;
    for (const auto& f : flags) {
      if (!is_tail(g.graph, f)) continue;
      auto it = label_of.find(f);
      (g.labeling.color.at(f) == Color::NS ? ns : r).insert(it == label_of.end() ? f : it->second);
    }
    os << v << "  g=" << g.labeling.genus.at(v) << "  NS " << join(ns) << "  R " << join(r) << "\n";
  }
  for (const auto& [a, b] : edges(g.graph)) {
    os << "edge " << a << "-" << b << "  " << to_string(g.labeling.color.at(a)) << "  "
       << g.graph.boundary.at(a) << "-" << g.graph.boundary.at(b) << "\n";
  }
  return os.str();
}

void require_format(const CliConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw UsageError("format '" + cfg.format + "' is not available for '" + cfg.command + "'");
}

void emit_graph(const CliConfig& cfg, const SusyGraph& g, std::ostream& out) {
  if (cfg.format == "dot") out << to_dot(g);
  else if (cfg.format == "table") out << graph_table(g);
  else out << to_json(g).dump() << "\n";
}

int fail(const ValidationReport& report, std::ostream& out) {
  out << to_json(report).dump() << "\n";
  return 1;
}

int cmd_validate(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  require_format(cfg, {"json", "table"});
  const Json j = read_input(cfg.input, in);
  ValidationReport report;
  if (j.is_object() && j.contains("flag_map")) {
    report = validate_susy_morphism(susy_morphism_from_json(j, base_dir(cfg.input)));
  } else {
    report = validate_susy_graph(susy_graph_from_json(j));
  }
  if (cfg.format == "table") {
    out << (report.ok() ? "valid" : "invalid") << "\n";
    for (const auto& v : report.violations) out << "  " << v << "\n";
  } else {
    out << to_json(report).dump() << "\n";
  }
  return report.ok() ? 0 : 1;
}

int cmd_lift(const CliConfig& cfg, const std::string& tree, const std::string& ns, const std::string& r,
             std::istream& in, std::ostream& out) {
  const SusyGraph t = susy_graph_from_json(read_input(tree, in));
  TailPartition p;
  for (const auto& l : split_labels(ns)) p.ns.insert(l);
  for (const auto& l : split_labels(r)) p.r.insert(l);
  emit_graph(cfg, lift_tree_coloring(t, p), out);
  return 0;
}

int cmd_dual_graph(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const CurveConfig c = curve_from_json(read_input(cfg.input, in));
  auto report = validate_curve(c);
  if (!report.ok()) return fail(report, out);
  emit_graph(cfg, dual_graph(c), out);
  return 0;
}

int cmd_enumerate(const CliConfig& cfg, int genus, int ns, int r, bool poset, std::ostream& out) {
  if (ns < 0 || r < 0) throw UsageError("label counts must be non-negative");
  std::set<Label> ns_labels, r_labels;
  for (int i = 1; i <= ns; ++i) ns_labels.insert(std::to_string(i));
  for (int i = ns + 1; i <= ns + r; ++i) r_labels.insert(std::to_string(i));
  const EnumerationResult res = enumerate_strata(genus, ns_labels, r_labels, {cfg.max_edges});

  if (cfg.format == "dot") {
    std::vector<SusyGraph> graphs;
    for (const auto& s : res.strata) graphs.push_back(s.graph);
    out << to_dot(graphs);
    return 0;
  }
  const ContractionPoset order = poset ? contraction_poset(res.strata) : ContractionPoset{};
  if (cfg.format == "table") {
    out << res.strata.size() << " strata\n";
    for (std::size_t i = 0; i < res.strata.size(); ++i) {
      const auto& g = res.strata[i].graph;
      out << i << "  E=" << edges(g.graph).size() << " (NS " << edges_of_color(g, Color::NS).size() << ", R "
          << edges_of_color(g, Color::R).size() << ")  V=" << g.graph.vertices.size() << "  "
          << res.strata[i].certificate << "\n";
    }
    if (poset) {
      for (const auto& [lo, hi] : order.covers) out << "cover " << lo << " -> " << hi << "\n";
    }
    return 0;
  }
  Json strata = Json::array();
  for (const auto& s : res.strata) strata.push_back(to_json(s));
  if (poset) {
    out << Json{{"strata", strata}, {"poset", to_json(order)}}.dump() << "\n";
  } else {
    out << strata.dump() << "\n";
  }
  return 0;
}

int cmd_dims(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  require_format(cfg, {"json", "table"});
  const StratumDimension d = stratum_dimension(susy_graph_from_json(read_input(cfg.input, in)));
  if (cfg.format == "table") {
    out << "even " << d.even << "\nodd " << d.odd << "\ncodim " << d.codim_even << "|" << d.codim_odd << "\n";
  } else {
    out << to_json(d).dump() << "\n";
  }
  return 0;
}

int cmd_evaluate(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  require_format(cfg, {"json", "table"});
  const SusyMorphism h = susy_morphism_from_json(read_input(cfg.input, in), base_dir(cfg.input));
  const GluingRecipe r = evaluate_operad(h);
  if (cfg.format == "table") out << describe(r) << "\n";
  else out << to_json(r).dump() << "\n";
  return 0;
}

int cmd_decompose(const CliConfig& cfg, bool reverse, std::istream& in, std::ostream& out) {
  require_format(cfg, {"json"});
  const SusyMorphism h = susy_morphism_from_json(read_input(cfg.input, in), base_dir(cfg.input));
  const auto steps =
      decompose(h, reverse ? DecompositionOrder::ReverseLexicographic : DecompositionOrder::Lexicographic);
  out << to_json(steps).dump() << "\n";
  return 0;
}

int cmd_check_axioms(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "table"});
  const AxiomReport report = check_operad_axioms(cfg.seed, cfg.cases);
  if (cfg.format == "table") {
    for (const auto& [condition, n] : report.checked) out << "condition " << condition << "  " << n << " cases\n";
    out << (report.ok() ? "all passed" : "FAILED") << "\n";
    for (const auto& f : report.failures) out << f << "\n";
  } else {
    Json checked = Json::object();
    for (const auto& [condition, n] : report.checked) checked[std::to_string(condition)] = n;
    out << Json{{"ok", report.ok()}, {"seed", cfg.seed}, {"cases", cfg.cases}, {"checked", checked},
                {"failures", report.failures}}
               .dump()
        << "\n";
  }
  return report.ok() ? 0 : 1;
}

int cmd_export_dot(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const Json j = read_input(cfg.input, in);
  const Json* list = nullptr;
  if (j.is_array()) list = &j;
  else if (j.is_object() && j.contains("strata")) list = &j.at("strata");
  if (!list) {
    out << to_dot(susy_graph_from_json(j));
    return 0;
  }
  if (!list->is_array()) throw ParseError("strata: expected an array");
  std::vector<SusyGraph> graphs;
  for (const auto& g : *list) graphs.push_back(susy_graph_from_json(g, {"certificate"}));
  out << to_dot(graphs);
  return 0;
}

int env_max_edges(int fallback) {
  const char* v = std::getenv("SUSY_KIT_MAX_EDGES");
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 0 || n > 1000) throw UsageError("SUSY_KIT_MAX_EDGES must be a non-negative integer");
  return static_cast<int>(n);
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Graphs, colorings, operads and boundary strata for moduli of SUSY curves", "susy-kit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "dot", "table"}));

  auto* validate = app.add_subcommand("validate", "Check a graph (or morphism) against its invariants");
  validate->add_option("input", cfg.input, "Graph JSON file, '-' for stdin");

  std::string tree, ns_list, r_list;
  auto* lift = app.add_subcommand("lift", "Color a stable modular tree for a split of its tail labels");
  lift->add_option("--tree", tree, "Tree JSON file")->required();
  lift->add_option("--ns", ns_list, "Comma-separated NS labels");
  lift->add_option("--r", r_list, "Comma-separated R labels");

  auto* dual = app.add_subcommand("dual-graph", "Dual graph of a nodal curve configuration");
  dual->add_option("input", cfg.input, "Curve JSON file, '-' for stdin");

  int genus = 0, ns = 0, r = 0;
  bool poset = false;
  int max_edges = -1;
  auto* enumerate = app.add_subcommand("enumerate", "Stable SUSY graphs of type (g, NS labels, R labels)");
  enumerate->add_option("--genus", genus, "Genus")->required();
  enumerate->add_option("--ns", ns, "Number of NS labels (1..k)");
  enumerate->add_option("--r", r, "Number of R labels (k+1..k+m)");
  enumerate->add_flag("--poset", poset, "Also print the contraction order");
  enumerate->add_option("--max-edges", max_edges, "Refuse 3g-3+#I above this");

  auto* dims = app.add_subcommand("dims", "Super-dimension and codimension of a boundary stratum");
  dims->add_option("input", cfg.input, "Graph JSON file, '-' for stdin");

  auto* evaluate = app.add_subcommand("evaluate", "Gluing recipe of a morphism");
  evaluate->add_option("input", cfg.input, "Morphism JSON file, '-' for stdin");

  bool reverse = false;
  auto* decomp = app.add_subcommand("decompose", "Elementary steps of a morphism");
  decomp->add_option("input", cfg.input, "Morphism JSON file, '-' for stdin");
  decomp->add_flag("--reverse", reverse, "Contract in reverse lexicographic order");

  auto* axioms = app.add_subcommand("check-axioms", "Randomized check of the operad compatibility conditions");
  axioms->add_option("--seed", cfg.seed, "Random seed");
  axioms->add_option("--cases", cfg.cases, "Cases per condition")->check(CLI::PositiveNumber);

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a graph or a strata list");
  dot->add_option("input", cfg.input, "Graph or strata JSON file, '-' for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.max_edges = max_edges >= 0 ? max_edges : env_max_edges(cfg.max_edges);
    if (cfg.command == "validate") return cmd_validate(cfg, in, out);
    if (cfg.command == "lift") return cmd_lift(cfg, tree, ns_list, r_list, in, out);
    if (cfg.command == "dual-graph") return cmd_dual_graph(cfg, in, out);
    if (cfg.command == "enumerate") return cmd_enumerate(cfg, genus, ns, r, poset, out);
    if (cfg.command == "dims") return cmd_dims(cfg, in, out);
    if (cfg.command == "evaluate") return cmd_evaluate(cfg, in, out);
    if (cfg.command == "decompose") return cmd_decompose(cfg, reverse, in, out);
    if (cfg.command == "check-axioms") return cmd_check_axioms(cfg, out);
    if (cfg.command == "export-dot") return cmd_export_dot(cfg, in, out);
    err << "error: unknown command '" << cfg.command << "'\n";
    return 2;
  } catch (const ParseError& e) {
    err << Json{{"error", "malformed input"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    ValidationReport report;
    report.add(e.what());
    return fail(report, out);
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"susy-kit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace susy::cli

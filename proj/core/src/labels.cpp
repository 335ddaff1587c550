#include "susy/labels.hpp"

#include <algorithm>

#include "susy/gf2.hpp"

namespace susy {

const char* to_string(Color c) { return c == Color::NS ? "NS" : "R"; }

SusyGraph make_modular(Graph g, std::map<VertexId, int> genus) {
  SusyGraph out{std::move(g), {}, true};
  out.labeling.genus = std::move(genus);
  for (const auto& f : out.graph.flags) out.labeling.color.emplace(f, Color::NS);
  for (const auto& t : tails(out.graph)) out.labeling.ns_tail_labels.emplace(t, t);
  return out;
}

SusyGraph with_flag_labels(SusyGraph g) {
  g.labeling.ns_tail_labels.clear();
  g.labeling.r_tail_labels.clear();
  for (const auto& t : tails(g.graph)) {
    auto& labels = g.labeling.color.at(t) == Color::NS ? g.labeling.ns_tail_labels
                                                       : g.labeling.r_tail_labels;
    labels.emplace(t, t);
  }
  return g;
}

namespace {

void check_tail_labels(const SusyGraph& g, Color c, ValidationReport& report) {
  const auto& labels = c == Color::NS ? g.labeling.ns_tail_labels : g.labeling.r_tail_labels;
  const std::string name = to_string(c);
  std::set<FlagId> hit;
  for (const auto& [label, f] : labels) {
    if (!g.graph.flags.count(f)) {
      report.add(name + " label '" + label + "' points to unknown flag '" + f + "'");
      continue;
    }
    if (!is_tail(g.graph, f)) {
      report.add(name + " label '" + label + "' points to non-tail '" + f + "'");
    } else if (g.labeling.color.count(f) && g.labeling.color.at(f) != c) {
      report.add(name + " label '" + label + "' points to a tail of the other color");
    }
    if (!hit.insert(f).second) report.add(name + " labeling not injective at tail '" + f + "'");
  }
  for (const auto& t : tails(g.graph)) {
    auto it = g.labeling.color.find(t);
    if (it != g.labeling.color.end() && it->second == c && !hit.count(t)) {
      report.add(name + " tail '" + t + "' carries no label");
    }
  }
}

}  // namespace

ValidationReport validate_susy_graph(const SusyGraph& g) {
  ValidationReport report = validate_graph(g.graph);
  if (!report.ok()) return report;
  const auto& lab = g.labeling;

  for (const auto& v : g.graph.vertices) {
    auto it = lab.genus.find(v);
    if (it == lab.genus.end()) {
      report.add("genus undefined at vertex '" + v + "'");
    } else if (it->second < 0) {
      report.add("negative genus at vertex '" + v + "'");
    }
  }
  for (const auto& [v, k] : lab.genus) {
    if (!g.graph.vertices.count(v)) report.add("genus defined on unknown vertex '" + v + "'");
  }

  bool colors_total = true;
  for (const auto& f : g.graph.flags) {
    if (!lab.color.count(f)) {
      report.add("color undefined on flag '" + f + "'");
      colors_total = false;
    }
  }
  for (const auto& [f, c] : lab.color) {
    if (!g.graph.flags.count(f)) report.add("color defined on unknown flag '" + f + "'");
  }
  if (colors_total) {
    for (const auto& [a, b] : edges(g.graph)) {
      if (lab.color.at(a) != lab.color.at(b)) {
        report.add("color not involution-compatible on edge ('" + a + "','" + b + "')");
      }
    }
    for (const auto& [v, fs] : flags_by_vertex(g.graph)) {
      auto r = std::count_if(fs.begin(), fs.end(), [&](const FlagId& f) { return lab.color.at(f) == Color::R; });
      if (r % 2 != 0) report.add("odd number of Ramond flags at vertex '" + v + "'");
    }
    if (g.modular) {
      for (const auto& [f, c] : lab.color) {
        if (c != Color::NS) report.add("modular graph carries Ramond flag '" + f + "'");
      }
    }
  }

  check_tail_labels(g, Color::NS, report);
  check_tail_labels(g, Color::R, report);
  for (const auto& [label, f] : lab.r_tail_labels) {
    if (lab.ns_tail_labels.count(label)) report.add("label '" + label + "' used for both colors");
  }
  if (g.modular && !lab.r_tail_labels.empty()) report.add("modular graph carries Ramond labels");
  return report;
}

ValidationReport validate_susy_morphism(const SusyMorphism& h, bool preserve_labels) {
  ValidationReport report;
  report.append(validate_susy_graph(h.source), "source: ");
  report.append(validate_susy_graph(h.target), "target: ");
  if (!report.ok()) return report;
  report = validate_morphism(h);
  if (!report.ok()) return report;
  if (h.source.modular != h.target.modular) report.add("source and target live in different categories");

  const auto& sc = h.source.labeling.color;
  const auto& tc = h.target.labeling.color;
  for (const auto& [f, s] : h.flag_map) {
    if (sc.at(s) != tc.at(f)) report.add("flag '" + f + "' changes color");
  }
  for (const auto& [a, b] : h.contracted) {
    if (a < b && sc.at(a) != sc.at(b)) {
      report.add("contracted pair ('" + a + "','" + b + "') mixes colors");
    }
  }

  std::map<VertexId, int> expected;
  std::map<VertexId, int> preimages;
  for (const auto& [v, w] : h.vertex_map) {
    expected[w] += h.source.labeling.genus.at(v);
    ++preimages[w];
  }
  for (const auto& [a, b] : h.contracted) {
    if (a < b) ++expected[h.vertex_map.at(h.source.graph.boundary.at(a))];
  }
  for (auto& [w, g] : expected) {
    g -= preimages[w] - 1;
    if (g != h.target.labeling.genus.at(w)) {
      report.add("genus at target vertex '" + w + "' is " + std::to_string(h.target.labeling.genus.at(w)) +
                 ", expected " + std::to_string(g));
    }
  }

  if (preserve_labels) {
    const auto check = [&](const std::map<Label, FlagId>& src, const std::map<Label, FlagId>& dst,
                           const char* name) {
      if (src.size() != dst.size()) {
        report.add(std::string(name) + " label sets differ");
        return;
      }
      for (const auto& [label, f] : dst) {
        auto it = src.find(label);
        if (it == src.end() || h.flag_map.at(f) != it->second) {
          report.add(std::string(name) + " label '" + label + "' not preserved");
        }
      }
    };
    check(h.source.labeling.ns_tail_labels, h.target.labeling.ns_tail_labels, "NS");
    check(h.source.labeling.r_tail_labels, h.target.labeling.r_tail_labels, "R");
  }
  return report;
}

std::set<FlagId> flags_of_color(const SusyGraph& g, Color c) {
  std::set<FlagId> out;
  for (const auto& [f, col] : g.labeling.color) {
    if (col == c) out.insert(f);
  }
  return out;
}

std::set<FlagId> tails_of_color(const SusyGraph& g, Color c) {
  std::set<FlagId> out;
  for (const auto& t : tails(g.graph)) {
    if (g.labeling.color.at(t) == c) out.insert(t);
  }
  return out;
}

std::set<FlagPair> edges_of_color(const SusyGraph& g, Color c) {
  std::set<FlagPair> out;
  for (const auto& e : edges(g.graph)) {
    if (g.labeling.color.at(e.first) == c) out.insert(e);
  }
  return out;
}

int flags_of_color_at(const SusyGraph& g, const VertexId& v, Color c) {
  int n = 0;
  for (const auto& f : flags_at(g.graph, v)) n += g.labeling.color.at(f) == c;
  return n;
}

int first_betti_number(const Graph& g) {
  return static_cast<int>(edges(g).size()) - static_cast<int>(g.vertices.size()) +
         static_cast<int>(connected_components(g).size());
}

int genus(const SusyGraph& g) {
  const auto components = connected_components(g.graph);
  std::map<VertexId, std::size_t> component_of;
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (const auto& v : components[i]) component_of[v] = i;
  }
  std::vector<int> per_component(components.size(), 1);
  for (const auto& [v, k] : g.labeling.genus) per_component[component_of.at(v)] += k - 1;
  for (const auto& [a, b] : edges(g.graph)) ++per_component[component_of.at(g.graph.boundary.at(a))];
  int total = 0;
  for (int k : per_component) total += k;
  return total;
}

StabilityReport stability(const SusyGraph& g) {
  StabilityReport report;
  for (const auto& [v, fs] : flags_by_vertex(g.graph)) {
    int excess = 2 * g.labeling.genus.at(v) - 2 + static_cast<int>(fs.size());
    report.excess.emplace(v, excess);
    if (excess <= 0) report.stable = false;
  }
  return report;
}

bool is_stable(const SusyGraph& g) { return stability(g).stable; }

bool is_tree(const SusyGraph& g) {
  return connected_components(g.graph).size() == 1 && genus(g) == 0;
}

SusyGraph forget(const SusyGraph& g) {
  if (g.modular) return g;
  SusyGraph out = g;
  out.modular = true;
  for (auto& [f, c] : out.labeling.color) c = Color::NS;
  for (auto& [label, f] : out.labeling.r_tail_labels) {
    if (!out.labeling.ns_tail_labels.emplace(label, f).second) {
      throw Error("forget: label '" + label + "' used for both colors");
    }
  }
  out.labeling.r_tail_labels.clear();
  return out;
}

SusyMorphism forget(const SusyMorphism& h) {
  return {forget(h.source), forget(h.target), h.flag_map, h.vertex_map, h.contracted};
}

SusyGraph include(const SusyGraph& modular_graph) {
  if (!modular_graph.modular) throw Error("include: input is not a modular graph");
  SusyGraph out = modular_graph;
  out.modular = false;
  return out;
}

SusyMorphism include(const SusyMorphism& h) {
  return {include(h.source), include(h.target), h.flag_map, h.vertex_map, h.contracted};
}

SusyGraph relabel_tails(const SusyGraph& g, const std::map<Label, Label>& ns,
                        const std::map<Label, Label>& r) {
  const auto apply = [](const std::map<Label, FlagId>& labels, const std::map<Label, Label>& s) {
    std::map<Label, FlagId> out;
    for (const auto& [label, f] : labels) {
      auto it = s.find(label);
      const Label& to = it == s.end() ? label : it->second;
      if (!out.emplace(to, f).second) throw Error("relabel_tails: map is not injective at '" + to + "'");
    }
    return out;
  };
  SusyGraph out = g;
  out.labeling.ns_tail_labels = apply(g.labeling.ns_tail_labels, ns);
  out.labeling.r_tail_labels = apply(g.labeling.r_tail_labels, r);
  return out;
}

namespace {

// Modular view of the input with the tail split checked against its labels.
// Returns the Ramond tail flags.
std::set<FlagId> ramond_tails_for(const SusyGraph& modular_graph, const TailPartition& p) {
  std::set<FlagId> ramond;
  const auto& labels = modular_graph.labeling.ns_tail_labels;
  for (const auto& label : p.ns) {
    if (p.r.count(label)) throw Error("partition: label '" + label + "' is in both parts");
    if (!labels.count(label)) throw Error("partition: unknown label '" + label + "'");
  }
  for (const auto& label : p.r) {
    auto it = labels.find(label);
    if (it == labels.end()) throw Error("partition: unknown label '" + label + "'");
    ramond.insert(it->second);
  }
  if (p.ns.size() + p.r.size() != labels.size()) throw Error("partition does not cover every tail label");
  return ramond;
}

SusyGraph colored(const SusyGraph& modular_graph, const TailPartition& p,
                  const std::set<FlagId>& ramond_flags) {
  SusyGraph out = modular_graph;
  out.modular = false;
  for (auto& [f, c] : out.labeling.color) c = ramond_flags.count(f) ? Color::R : Color::NS;
  out.labeling.ns_tail_labels.clear();
  for (const auto& [label, f] : modular_graph.labeling.ns_tail_labels) {
    (p.r.count(label) ? out.labeling.r_tail_labels : out.labeling.ns_tail_labels).emplace(label, f);
  }
  return out;
}

SusyGraph checked_modular(const SusyGraph& g) {
  SusyGraph m = forget(g);
  auto report = validate_susy_graph(m);
  if (!report.ok()) throw Error("invalid graph: " + report.violations.front());
  return m;
}

}  // namespace

SusyGraph lift_tree_coloring(const SusyGraph& tree, const TailPartition& partition) {
  const SusyGraph m = checked_modular(tree);
  if (!is_tree(m)) throw Error("lift_tree_coloring: input is not a tree");
  if (!is_stable(m)) throw Error("lift_tree_coloring: input is not stable");
  if (partition.r.size() % 2 != 0) throw Error("lift_tree_coloring: odd number of Ramond labels");
  std::set<FlagId> ramond = ramond_tails_for(m, partition);

  std::map<VertexId, std::set<FlagPair>> open_edges;
  std::map<VertexId, bool> odd;
  for (const auto& v : m.graph.vertices) {
    open_edges[v];
    odd[v] = false;
  }
  for (const auto& f : ramond) odd[m.graph.boundary.at(f)] = !odd[m.graph.boundary.at(f)];
  for (const auto& e : edges(m.graph)) {
    open_edges[m.graph.boundary.at(e.first)].insert(e);
    open_edges[m.graph.boundary.at(e.second)].insert(e);
  }

  std::set<VertexId> leaves;
  for (const auto& [v, es] : open_edges) {
    if (es.size() == 1) leaves.insert(v);
  }
  while (!leaves.empty()) {
    VertexId v = *leaves.begin();
    leaves.erase(leaves.begin());
    auto& mine = open_edges.at(v);
    if (mine.size() != 1) continue;  // last vertex of the tree
    FlagPair e = *mine.begin();
    mine.clear();
    // an odd count of Ramond flags so far forces a Ramond edge
    if (odd[v]) {
      ramond.insert(e.first);
      ramond.insert(e.second);
      odd[v] = false;
    }
    const FlagId& far_flag = m.graph.boundary.at(e.first) == v ? e.second : e.first;
    const VertexId u = m.graph.boundary.at(far_flag);
    if (ramond.count(far_flag)) odd[u] = !odd[u];
    auto& theirs = open_edges.at(u);
    theirs.erase(e);
    if (theirs.size() == 1) leaves.insert(u);
  }

  SusyGraph out = colored(m, partition, ramond);
  auto report = validate_susy_graph(out);
  if (!report.ok()) throw Error("lift_tree_coloring: internal parity failure: " + report.violations.front());
  return out;
}

std::uint64_t count_lifts(const SusyGraph& tree) {
  const SusyGraph m = checked_modular(tree);
  if (!is_tree(m)) throw Error("count_lifts: input is not a tree");
  if (!is_stable(m)) throw Error("count_lifts: input is not stable");
  return count_even_partitions(static_cast<unsigned>(tails(m.graph).size()));
}

std::uint64_t count_even_partitions(unsigned k) {
  if (k == 0) return 1;
  if (k > 64) throw Error("count_even_partitions: result does not fit in 64 bits");
  return std::uint64_t{1} << (k - 1);
}

namespace {

struct ParitySystem {
  std::vector<FlagPair> edges;
  std::optional<Gf2System::Solution> solution;
};

ParitySystem parity_system(const SusyGraph& m, const std::set<FlagId>& ramond) {
  ParitySystem ps;
  const auto es = edges(m.graph);
  ps.edges.assign(es.begin(), es.end());
  std::map<VertexId, std::vector<std::size_t>> incident;
  std::map<VertexId, bool> rhs;
  for (const auto& v : m.graph.vertices) {
    incident[v];
    rhs[v] = false;
  }
  for (const auto& t : tails(m.graph)) {
    if (ramond.count(t)) rhs[m.graph.boundary.at(t)] = !rhs[m.graph.boundary.at(t)];
  }
  for (std::size_t i = 0; i < ps.edges.size(); ++i) {
    // a loop appears twice at its vertex and cancels
    incident[m.graph.boundary.at(ps.edges[i].first)].push_back(i);
    incident[m.graph.boundary.at(ps.edges[i].second)].push_back(i);
  }
  Gf2System system(ps.edges.size());
  for (const auto& [v, vars] : incident) system.add_equation(vars, rhs.at(v));
  ps.solution = system.solve();
  return ps;
}

}  // namespace

std::uint64_t lift_count_general(const SusyGraph& g, const TailPartition& partition) {
  const SusyGraph m = checked_modular(g);
  const auto ps = parity_system(m, ramond_tails_for(m, partition));
  if (!ps.solution) return 0;
  if (ps.solution->nullspace.size() >= 64) throw Error("lift_count_general: count exceeds 64 bits");
  return std::uint64_t{1} << ps.solution->nullspace.size();
}

std::vector<SusyGraph> all_lifts(const SusyGraph& g, const TailPartition& partition) {
  const SusyGraph m = checked_modular(g);
  const auto ramond_tails = ramond_tails_for(m, partition);
  const auto ps = parity_system(m, ramond_tails);
  std::vector<SusyGraph> out;
  if (!ps.solution) return out;
  const auto& basis = ps.solution->nullspace;
  if (basis.size() >= 32) throw Error("all_lifts: too many colorings to enumerate");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
    std::vector<bool> x = ps.solution->particular;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if ((mask >> b) & 1u) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = x[i] != basis[b][i];
      }
    }
    std::set<FlagId> ramond = ramond_tails;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i]) {
        ramond.insert(ps.edges[i].first);
        ramond.insert(ps.edges[i].second);
      }
    }
    out.push_back(colored(m, partition, ramond));
  }
  return out;
}

}  // namespace susy

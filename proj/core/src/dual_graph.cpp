#include "susy/dual_graph.hpp"

#include <map>
#include <set>

namespace susy {

VertexId component_vertex(std::size_t i) { return "C" + std::to_string(i); }

ValidationReport validate_curve(const CurveConfig& c) {
  ValidationReport report;
  std::map<std::string, const SpecialPoint*> points;
  std::set<Label> labels;
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    const auto& comp = c.components[i];
    const std::string where = "component " + std::to_string(i);
    if (comp.genus < 0) report.add(where + ": negative genus");
    int ramond = 0;
    for (const auto& p : comp.special_points) {
      if (p.id.empty()) report.add(where + ": special point with empty id");
      if (!points.emplace(p.id, &p).second) report.add("special point id '" + p.id + "' used twice");
      if (p.color == Color::R) ++ramond;
      if (p.kind == PointKind::Puncture) {
        if (p.label.empty()) report.add("puncture '" + p.id + "' has no label");
        else if (!labels.insert(p.label).second) report.add("puncture label '" + p.label + "' used twice");
      } else if (!p.label.empty()) {
        report.add("node half '" + p.id + "' carries a label");
      }
    }
    if (ramond % 2 != 0) report.add(where + ": odd number of Ramond special points");
    const int excess = 2 * comp.genus - 2 + static_cast<int>(comp.special_points.size());
    if (excess <= 0) report.add(where + ": unstable (2g-2+#points = " + std::to_string(excess) + ")");
  }

  std::set<std::string> paired;
  for (const auto& [a, b] : c.node_pairing) {
    const std::string pair = "node ('" + a + "','" + b + "')";
    if (a == b) {
      report.add(pair + ": pairs a point with itself");
      continue;
    }
    bool known = true;
    for (const auto& id : {a, b}) {
      auto it = points.find(id);
      if (it == points.end()) {
        report.add(pair + ": unknown point '" + id + "'");
        known = false;
      } else if (it->second->kind != PointKind::Node) {
        report.add(pair + ": '" + id + "' is a puncture");
        known = false;
      }
      if (!paired.insert(id).second) report.add("node half '" + id + "' paired twice");
    }
    if (known && points.at(a)->color != points.at(b)->color) report.add(pair + ": halves of different colors");
  }
  for (const auto& [id, p] : points) {
    if (p->kind == PointKind::Node && !paired.count(id)) report.add("node half '" + id + "' is unpaired");
  }
  return report;
}

namespace {

void require_valid(const CurveConfig& c, const char* who) {
  auto report = validate_curve(c);
  if (!report.ok()) throw Error(std::string(who) + ": invalid curve: " + report.violations.front());
}

}  // namespace

SusyGraph dual_graph(const CurveConfig& c) {
  require_valid(c, "dual_graph");
  SusyGraph out;
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    const VertexId v = component_vertex(i);
    out.graph.vertices.insert(v);
    out.labeling.genus.emplace(v, c.components[i].genus);
    for (const auto& p : c.components[i].special_points) {
      out.graph.flags.insert(p.id);
      out.graph.boundary.emplace(p.id, v);
      out.graph.involution.emplace(p.id, p.id);
      out.labeling.color.emplace(p.id, p.color);
      if (p.kind == PointKind::Puncture) {
        (p.color == Color::NS ? out.labeling.ns_tail_labels : out.labeling.r_tail_labels).emplace(p.label, p.id);
      }
    }
  }
  for (const auto& [a, b] : c.node_pairing) {
    out.graph.involution[a] = b;
    out.graph.involution[b] = a;
  }
  return out;
}

SusyGraph modular_dual_graph(const CurveConfig& c) {
  require_valid(c, "modular_dual_graph");
  Graph g;
  std::map<VertexId, int> genus;
  std::map<Label, FlagId> labels;
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    genus.emplace(component_vertex(i), c.components[i].genus);
    for (const auto& p : c.components[i].special_points) {
      g.flags.insert(p.id);
      g.boundary.emplace(p.id, component_vertex(i));
      if (p.kind == PointKind::Puncture) labels.emplace(p.label, p.id);
    }
  }
  for (const auto& [v, k] : genus) g.vertices.insert(v);
  std::map<FlagId, FlagId> partner;
  for (const auto& [a, b] : c.node_pairing) {
    partner.emplace(a, b);
    partner.emplace(b, a);
  }
  for (const auto& f : g.flags) {
    auto it = partner.find(f);
    g.involution.emplace(f, it == partner.end() ? f : it->second);
  }
  SusyGraph out = make_modular(std::move(g), std::move(genus));
  out.labeling.ns_tail_labels = std::move(labels);
  return out;
}

bool reduction_compatibility(const CurveConfig& c) { return forget(dual_graph(c)) == modular_dual_graph(c); }

}  // namespace susy

#include "dot.hpp"

#include <sstream>

namespace susy::cli {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

const char* style(Color c) { return c == Color::NS ? "solid" : "dashed"; }

void body(std::ostringstream& os, const SusyGraph& g, const std::string& prefix, const std::string& indent) {
  std::map<FlagId, Label> label_of;
  for (const auto& [l, f] : g.labeling.ns_tail_labels) label_of.emplace(f, l);
  for (const auto& [l, f] : g.labeling.r_tail_labels) label_of.emplace(f, l);
  for (const auto& v : g.graph.vertices) {
    os << indent << quoted(prefix + v) << " [label=\"g=" << g.labeling.genus.at(v) << "\"];\n";
  }
  for (const auto& t : tails(g.graph)) {
    auto it = label_of.find(t);
    const std::string anchor = prefix + "tail:" + t;
    os << indent << quoted(anchor) << " [shape=point];\n";
    os << indent << quoted(prefix + g.graph.boundary.at(t)) << " -- " << quoted(anchor)
       << " [style=" << style(g.labeling.color.at(t))
       << ", label=" << quoted(it == label_of.end() ? t : it->second) << "];\n";
  }
  for (const auto& [a, b] : edges(g.graph)) {
    os << indent << quoted(prefix + g.graph.boundary.at(a)) << " -- " << quoted(prefix + g.graph.boundary.at(b))
       << " [style=" << style(g.labeling.color.at(a)) << "];\n";
  }
}

}  // namespace

std::string to_dot(const SusyGraph& g) {
  std::ostringstream os;
  os << "graph G {\n  node [shape=circle];\n";
  body(os, g, "", "  ");
  os << "}\n";
  return os.str();
}

std::string to_dot(const std::vector<SusyGraph>& graphs) {
  std::ostringstream os;
  os << "graph strata {\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    os << "  subgraph cluster_" << i << " {\n    label=\"stratum " << i << "\";\n";
    body(os, graphs[i], "s" + std::to_string(i) + "/", "    ");
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace susy::cli

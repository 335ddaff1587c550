#include "susy/graph.hpp"

#include "union_find.hpp"

namespace susy {

FlagPair sorted_pair(FlagId a, FlagId b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

void ValidationReport::append(const ValidationReport& other, const std::string& prefix) {
  for (const auto& v : other.violations) violations.push_back(prefix + v);
}

ValidationReport validate_graph(const Graph& g) {
  ValidationReport report;
  for (const auto& f : g.flags) {
    auto b = g.boundary.find(f);
    if (b == g.boundary.end()) {
      report.add("boundary undefined on flag '" + f + "'");
    } else if (!g.vertices.count(b->second)) {
      report.add("boundary of flag '" + f + "' is unknown vertex '" + b->second + "'");
    }
    auto j = g.involution.find(f);
    if (j == g.involution.end()) {
      report.add("involution undefined on flag '" + f + "'");
      continue;
    }
    if (!g.flags.count(j->second)) {
      report.add("involution maps flag '" + f + "' to unknown flag '" + j->second + "'");
      continue;
    }
    auto jj = g.involution.find(j->second);
    if (jj == g.involution.end() || jj->second != f) {
      report.add("involution not involutive at flag '" + f + "'");
    }
  }
  for (const auto& [f, v] : g.boundary) {
    if (!g.flags.count(f)) report.add("boundary defined on unknown flag '" + f + "'");
  }
  for (const auto& [f, f2] : g.involution) {
    if (!g.flags.count(f)) report.add("involution defined on unknown flag '" + f + "'");
  }
  return report;
}

bool is_tail(const Graph& g, const FlagId& f) { return g.involution.at(f) == f; }

std::set<FlagId> tails(const Graph& g) {
  std::set<FlagId> out;
  for (const auto& [f, j] : g.involution) {
    if (f == j) out.insert(f);
  }
  return out;
}

std::set<FlagPair> edges(const Graph& g) {
  std::set<FlagPair> out;
  for (const auto& [f, j] : g.involution) {
    if (f < j) out.emplace(f, j);
  }
  return out;
}

std::set<FlagId> flags_at(const Graph& g, const VertexId& v) {
  if (!g.vertices.count(v)) throw Error("unknown vertex '" + v + "'");
  std::set<FlagId> out;
  for (const auto& [f, b] : g.boundary) {
    if (b == v) out.insert(f);
  }
  return out;
}

std::map<VertexId, std::set<FlagId>> flags_by_vertex(const Graph& g) {
  std::map<VertexId, std::set<FlagId>> out;
  for (const auto& v : g.vertices) out[v];
  for (const auto& [f, v] : g.boundary) out[v].insert(f);
  return out;
}

std::vector<std::set<VertexId>> connected_components(const Graph& g) {
  UnionFind<VertexId> uf(g.vertices.begin(), g.vertices.end());
  for (const auto& [a, b] : edges(g)) uf.unite(g.boundary.at(a), g.boundary.at(b));
  return uf.classes();
}

Graph corolla(const VertexId& v, const std::set<FlagId>& flags) {
  Graph g;
  g.vertices.insert(v);
  for (const auto& f : flags) {
    g.flags.insert(f);
    g.boundary.emplace(f, v);
    g.involution.emplace(f, f);
  }
  return g;
}

Graph retag(const Graph& g, const std::string& prefix) {
  Graph out;
  for (const auto& f : g.flags) out.flags.insert(prefix + f);
  for (const auto& v : g.vertices) out.vertices.insert(prefix + v);
  for (const auto& [f, v] : g.boundary) out.boundary.emplace(prefix + f, prefix + v);
  for (const auto& [f, j] : g.involution) out.involution.emplace(prefix + f, prefix + j);
  return out;
}

Graph union_of_disjoint(const Graph& a, const Graph& b) {
  Graph out = a;
  for (const auto& f : b.flags) {
    if (!out.flags.insert(f).second) throw Error("union: flag '" + f + "' occurs in both graphs");
  }
  for (const auto& v : b.vertices) {
    if (!out.vertices.insert(v).second) {
      throw Error("union: vertex '" + v + "' occurs in both graphs");
    }
  }
  out.boundary.insert(b.boundary.begin(), b.boundary.end());
  out.involution.insert(b.involution.begin(), b.involution.end());
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  return union_of_disjoint(retag(a, "0/"), retag(b, "1/"));
}

std::set<FlagPair> pairs_of(const FlagMap& involution) {
  std::set<FlagPair> out;
  for (const auto& [a, b] : involution) out.insert(sorted_pair(a, b));
  return out;
}

FlagMap involution_from_pairs(const std::set<FlagPair>& pairs) {
  FlagMap out;
  for (const auto& [a, b] : pairs) {
    out.emplace(a, b);
    out.emplace(b, a);
  }
  return out;
}

ValidationReport validate_morphism_data(const Graph& source, const Graph& target,
                                        const FlagMap& flag_map, const VertexMap& vertex_map,
                                        const FlagMap& contracted) {
  ValidationReport report;
  report.append(validate_graph(source), "source: ");
  report.append(validate_graph(target), "target: ");
  if (!report.ok()) return report;

  // flag map: total on target flags, injective into source flags
  std::set<FlagId> image;
  for (const auto& f : target.flags) {
    auto it = flag_map.find(f);
    if (it == flag_map.end()) {
      report.add("flag_map undefined on target flag '" + f + "'");
      continue;
    }
    if (!source.flags.count(it->second)) {
      report.add("flag_map sends '" + f + "' to unknown source flag '" + it->second + "'");
      continue;
    }
    if (!image.insert(it->second).second) {
      report.add("flag_map not injective: source flag '" + it->second + "' hit twice");
    }
  }
  for (const auto& [f, s] : flag_map) {
    if (!target.flags.count(f)) report.add("flag_map defined on unknown target flag '" + f + "'");
  }

  // vertex map: total, surjective
  std::set<VertexId> hit;
  for (const auto& v : source.vertices) {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end()) {
      report.add("vertex_map undefined on source vertex '" + v + "'");
    } else if (!target.vertices.count(it->second)) {
      report.add("vertex_map sends '" + v + "' to unknown target vertex '" + it->second + "'");
    } else {
      hit.insert(it->second);
    }
  }
  for (const auto& [v, w] : vertex_map) {
    if (!source.vertices.count(v)) report.add("vertex_map defined on unknown source vertex '" + v + "'");
  }
  for (const auto& w : target.vertices) {
    if (!hit.count(w)) report.add("vertex_map not surjective: '" + w + "' has no preimage");
  }
  if (!report.ok()) return report;

  // boundary compatibility and pull-back of tails / edges
  for (const auto& f : target.flags) {
    const auto& s = flag_map.at(f);
    if (vertex_map.at(source.boundary.at(s)) != target.boundary.at(f)) {
      report.add("boundary incompatible at target flag '" + f + "'");
    }
    const auto& jf = target.involution.at(f);
    if (jf == f) {
      if (!is_tail(source, s)) {
        report.add("target tail '" + f + "' pulls back to non-tail '" + s + "'");
      }
    } else {
      const auto& sj = flag_map.at(jf);
      bool edge = source.involution.at(s) == sj;
      bool graft = is_tail(source, s) && is_tail(source, sj);
      if (!edge && !graft) {
        report.add("target edge at '" + f + "' pulls back to neither an edge nor a tail pair");
      }
    }
  }

  // contracted involution on the complement of the image
  for (const auto& f : source.flags) {
    if (image.count(f)) continue;
    auto it = contracted.find(f);
    if (it == contracted.end()) {
      report.add("contracted involution undefined on source flag '" + f + "'");
      continue;
    }
    const auto& g = it->second;
    if (g == f) {
      report.add("contracted involution fixes flag '" + f + "'");
      continue;
    }
    if (!source.flags.count(g) || image.count(g)) {
      report.add("contracted involution sends '" + f + "' outside the contracted flags");
      continue;
    }
    auto back = contracted.find(g);
    if (back == contracted.end() || back->second != f) {
      report.add("contracted involution not involutive at '" + f + "'");
      continue;
    }
    bool edge = source.involution.at(f) == g;
    bool tail_pair = is_tail(source, f) && is_tail(source, g);
    if (!edge && !tail_pair) {
      report.add("contracted pair ('" + f + "','" + g + "') is neither an edge nor a tail pair");
    }
    if (vertex_map.at(source.boundary.at(f)) != vertex_map.at(source.boundary.at(g))) {
      report.add("contracted pair ('" + f + "','" + g + "') joins vertices with distinct images");
    }
  }
  for (const auto& [f, g] : contracted) {
    if (!source.flags.count(f) || image.count(f)) {
      report.add("contracted involution defined on non-contracted flag '" + f + "'");
    }
  }
  if (!report.ok()) return report;

  // no mergers
  UnionFind<VertexId> uf(source.vertices.begin(), source.vertices.end());
  for (const auto& [f, g] : contracted) uf.unite(source.boundary.at(f), source.boundary.at(g));
  std::map<VertexId, std::set<VertexId>> classes_of_image;
  for (const auto& v : source.vertices) classes_of_image[vertex_map.at(v)].insert(uf.find(v));
  for (const auto& [w, reps] : classes_of_image) {
    if (reps.size() > 1) {
      report.add("merger: preimages of '" + w + "' are not joined by contracted flags");
    }
  }
  return report;
}

}  // namespace susy

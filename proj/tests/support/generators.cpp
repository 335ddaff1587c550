#include "generators.hpp"

#include <algorithm>
#include <map>

namespace susy::testing {

SusyGraph random_stable_tree(Rng& rng, int n_tails) {
  Graph g;
  g.vertices.insert("u0");
  for (int i = 1; i <= n_tails; ++i) {
    const FlagId f = "f" + std::to_string(i);
    g.flags.insert(f);
    g.boundary[f] = "u0";
    g.involution[f] = f;
  }
  const int splits = static_cast<int>(rng.below(static_cast<std::size_t>(std::max(1, n_tails - 2))));
  int next_vertex = 1;
  for (int s = 0; s < splits; ++s) {
    std::vector<VertexId> big;
    for (const auto& [v, flags] : flags_by_vertex(g)) {
      if (flags.size() >= 4) big.push_back(v);
    }
    if (big.empty()) break;
    const VertexId v = big[rng.below(big.size())];
    auto at = flags_at(g, v);
    std::vector<FlagId> flags(at.begin(), at.end());
    rng.shuffle(flags);
    const std::size_t cut = 2 + rng.below(flags.size() - 3);
    const VertexId w = "u" + std::to_string(next_vertex++);
    g.vertices.insert(w);
    for (std::size_t i = cut; i < flags.size(); ++i) g.boundary[flags[i]] = w;
    const FlagId a = "e" + std::to_string(s) + "a";
    const FlagId b = "e" + std::to_string(s) + "b";
    g.flags.insert(a);
    g.flags.insert(b);
    g.boundary[a] = v;
    g.boundary[b] = w;
    g.involution[a] = b;
    g.involution[b] = a;
  }
  std::map<VertexId, int> genus;
  for (const auto& v : g.vertices) genus[v] = 0;
  SusyGraph out = make_modular(std::move(g), std::move(genus));
  out.labeling.ns_tail_labels.clear();
  for (int i = 1; i <= n_tails; ++i) out.labeling.ns_tail_labels["" + std::to_string(i)] = "f" + std::to_string(i);
  return out;
}

SusyGraph random_susy_graph(Rng& rng, int max_vertices) {
  SusyGraph out;
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(max_vertices)));
  int next_flag = 0;
  const auto vertex = [](int i) { return "v" + std::to_string(i); };
  const auto add_flag = [&](int v, Color c) {
    const FlagId f = "f" + std::to_string(next_flag++);
    out.graph.flags.insert(f);
    out.graph.boundary[f] = vertex(v);
    out.graph.involution[f] = f;
    out.labeling.color[f] = c;
    return f;
  };
  const auto add_edge = [&](int u, int w) {
    const Color c = rng.coin() ? Color::R : Color::NS;
    const FlagId a = add_flag(u, c);
    const FlagId b = add_flag(w, c);
    out.graph.involution[a] = b;
    out.graph.involution[b] = a;
  };
  for (int i = 0; i < n; ++i) {
    out.graph.vertices.insert(vertex(i));
    out.labeling.genus[vertex(i)] = static_cast<int>(rng.below(3));
  }
  for (int i = 1; i < n; ++i) add_edge(static_cast<int>(rng.below(static_cast<std::size_t>(i))), i);
  for (int k = static_cast<int>(rng.below(3)); k > 0; --k) {
    add_edge(static_cast<int>(rng.below(static_cast<std::size_t>(n))), static_cast<int>(rng.below(static_cast<std::size_t>(n))));
  }
  for (int i = 0; i < n; ++i) {
    for (int k = static_cast<int>(rng.below(3)); k > 0; --k) add_flag(i, rng.chance(1, 3) ? Color::R : Color::NS);
  }
  for (int i = 0; i < n; ++i) {
    const VertexId v = vertex(i);
    while (2 * out.labeling.genus[v] - 2 + static_cast<int>(flags_at(out.graph, v).size()) <= 0) add_flag(i, Color::NS);
    if (flags_of_color_at(out, v, Color::R) % 2 == 0) continue;
    bool flipped = false;
    for (const auto& f : flags_at(out.graph, v)) {
      if (is_tail(out.graph, f) && out.labeling.color[f] == Color::NS) {
        out.labeling.color[f] = Color::R;
        flipped = true;
        break;
      }
    }
    if (!flipped) add_flag(i, Color::R);
  }
  int ns = 0, r = 0;
  for (const auto& t : tails(out.graph)) {
    if (out.labeling.color[t] == Color::NS) out.labeling.ns_tail_labels["n" + std::to_string(ns++)] = t;
    else out.labeling.r_tail_labels["r" + std::to_string(r++)] = t;
  }
  return out;
}

SusyMorphism random_morphism(Rng& rng, const SusyGraph& g, const std::string& tag) {
  std::set<FlagPair> grafts;
  for (Color c : {Color::NS, Color::R}) {
    auto ts = tails_of_color(g, c);
    std::vector<FlagId> list(ts.begin(), ts.end());
    rng.shuffle(list);
    for (std::size_t i = 0; i + 1 < list.size(); i += 2) {
      if (rng.chance(1, 3)) grafts.insert(sorted_pair(list[i], list[i + 1]));
    }
  }
  const SusyMorphism gr = graft(g, grafts);

  std::set<FlagPair> contracted;
  for (const auto& e : edges(gr.target.graph)) {
    if (rng.chance(2, 5)) contracted.insert(e);
  }
  const SusyMorphism co = contract(gr.target, contracted);

  FlagMap flags;
  VertexMap vertices;
  std::vector<FlagId> fl(co.target.graph.flags.begin(), co.target.graph.flags.end());
  rng.shuffle(fl);
  for (std::size_t i = 0; i < fl.size(); ++i) flags[fl[i]] = tag + "f" + std::to_string(i);
  std::size_t k = 0;
  for (const auto& v : co.target.graph.vertices) vertices[v] = tag + "v" + std::to_string(k++);
  const SusyMorphism rn = rename(co.target, flags, vertices);
  return compose(compose(gr, co), rn);
}

CurveConfig random_curve(Rng& rng, int max_components) {
  CurveConfig c;
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(max_components)));
  c.components.resize(static_cast<std::size_t>(n));
  for (auto& comp : c.components) comp.genus = static_cast<int>(rng.below(3));
  int next_point = 0, next_label = 0;
  const auto add_point = [&](int comp, Color color, PointKind kind) {
    SpecialPoint p;
    p.id = "s" + std::to_string(next_point++);
    p.color = color;
    p.kind = kind;
    if (kind == PointKind::Puncture) p.label = "p" + std::to_string(next_label++);
    c.components[static_cast<std::size_t>(comp)].special_points.push_back(p);
    return p.id;
  };
  const auto add_node = [&](int a, int b) {
    const Color color = rng.coin() ? Color::R : Color::NS;
    c.node_pairing.push_back({add_point(a, color, PointKind::Node), add_point(b, color, PointKind::Node)});
  };
  for (int i = 1; i < n; ++i) {
    if (rng.chance(4, 5)) add_node(static_cast<int>(rng.below(static_cast<std::size_t>(i))), i);
  }
  for (int k = static_cast<int>(rng.below(3)); k > 0; --k) {
    add_node(static_cast<int>(rng.below(static_cast<std::size_t>(n))), static_cast<int>(rng.below(static_cast<std::size_t>(n))));
  }
  for (int i = 0; i < n; ++i) {
    for (int k = static_cast<int>(rng.below(3)); k > 0; --k) {
      add_point(i, rng.chance(1, 3) ? Color::R : Color::NS, PointKind::Puncture);
    }
    auto& comp = c.components[static_cast<std::size_t>(i)];
    const auto ramond = std::count_if(comp.special_points.begin(), comp.special_points.end(),
                                      [](const SpecialPoint& p) { return p.color == Color::R; });
    if (ramond % 2 != 0) add_point(i, Color::R, PointKind::Puncture);
    while (2 * comp.genus - 2 + static_cast<int>(comp.special_points.size()) <= 0) {
      add_point(i, Color::NS, PointKind::Puncture);
    }
  }
  rng.shuffle(c.node_pairing);
  return c;
}

std::vector<TailPartition> even_partitions(const SusyGraph& tree) {
  std::vector<Label> labels;
  for (const auto& [l, f] : tree.labeling.ns_tail_labels) labels.push_back(l);
  std::vector<TailPartition> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << labels.size()); ++mask) {
    TailPartition p;
    for (std::size_t i = 0; i < labels.size(); ++i) ((mask >> i) & 1 ? p.r : p.ns).insert(labels[i]);
    if (p.r.size() % 2 == 0) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace susy::testing

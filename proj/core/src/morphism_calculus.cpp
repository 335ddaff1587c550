#include "susy/morphism_calculus.hpp"

#include <algorithm>

#include "union_find.hpp"

namespace susy {

const char* to_string(ElementaryKind kind) {
  switch (kind) {
    case ElementaryKind::Grafting: return "grafting";
    case ElementaryKind::Isomorphism: return "isomorphism";
    case ElementaryKind::EdgeContraction: return "edge_contraction";
    case ElementaryKind::LoopContraction: return "loop_contraction";
    case ElementaryKind::VirtualContraction: return "virtual_contraction";
    case ElementaryKind::Composite: return "composite";
  }
  return "composite";
}

namespace {

void require_valid(const SusyGraph& g, const char* who) {
  auto report = validate_susy_graph(g);
  if (!report.ok()) throw Error(std::string(who) + ": invalid graph: " + report.violations.front());
}

void drop_labels_of(SusyLabeling& lab, const std::set<FlagId>& flags) {
  for (auto* labels : {&lab.ns_tail_labels, &lab.r_tail_labels}) {
    std::erase_if(*labels, [&](const auto& kv) { return flags.count(kv.second) > 0; });
  }
}

void check_disjoint_pairs(const std::set<FlagPair>& pairs, const char* who) {
  std::set<FlagId> seen;
  for (const auto& [a, b] : pairs) {
    if (a == b) throw Error(std::string(who) + ": pair joins flag '" + a + "' with itself");
    if (!seen.insert(a).second || !seen.insert(b).second) {
      throw Error(std::string(who) + ": pairs are not disjoint");
    }
  }
}

SusyMorphism identity_maps(const SusyGraph& source, const SusyGraph& target) {
  SusyMorphism h{source, target, {}, {}, {}};
  for (const auto& f : target.graph.flags) h.flag_map.emplace(f, f);
  for (const auto& v : source.graph.vertices) h.vertex_map.emplace(v, v);
  return h;
}

}  // namespace

SusyMorphism graft(const SusyGraph& g, const std::set<FlagPair>& tail_pairs) {
  require_valid(g, "graft");
  check_disjoint_pairs(tail_pairs, "graft");
  SusyGraph target = g;
  std::set<FlagId> grafted;
  for (const auto& [a, b] : tail_pairs) {
    if (!g.graph.flags.count(a) || !g.graph.flags.count(b)) throw Error("graft: unknown flag");
    if (!is_tail(g.graph, a) || !is_tail(g.graph, b)) throw Error("graft: ('" + a + "','" + b + "') are not both tails");
    if (g.labeling.color.at(a) != g.labeling.color.at(b)) throw Error("graft: tails of different colors");
    target.graph.involution[a] = b;
    target.graph.involution[b] = a;
    grafted.insert(a);
    grafted.insert(b);
  }
  drop_labels_of(target.labeling, grafted);
  return identity_maps(g, target);
}

SusyMorphism contract(const SusyGraph& g, const std::set<FlagPair>& pairs) {
  require_valid(g, "contract");
  check_disjoint_pairs(pairs, "contract");
  const auto& G = g.graph;
  UnionFind<VertexId> uf(G.vertices.begin(), G.vertices.end());
  std::set<FlagId> removed;
  for (const auto& [a, b] : pairs) {
    if (!G.flags.count(a) || !G.flags.count(b)) throw Error("contract: unknown flag");
    bool edge = G.involution.at(a) == b;
    bool tails_pair = is_tail(G, a) && is_tail(G, b);
    if (!edge && !tails_pair) {
      throw Error("contract: ('" + a + "','" + b + "') is neither an edge nor a pair of tails");
    }
    if (g.labeling.color.at(a) != g.labeling.color.at(b)) throw Error("contract: pair mixes colors");
    uf.unite(G.boundary.at(a), G.boundary.at(b));
    removed.insert(a);
    removed.insert(b);
  }

  SusyMorphism h{g, {}, {}, {}, {}};
  SusyGraph& t = h.target;
  t.modular = g.modular;
  for (const auto& v : G.vertices) {
    const VertexId rep = uf.find(v);
    h.vertex_map.emplace(v, rep);
    t.graph.vertices.insert(rep);
    t.labeling.genus[rep] += g.labeling.genus.at(v) - 1;
  }
  for (auto& [rep, k] : t.labeling.genus) k += 1;
  for (const auto& [a, b] : pairs) {
    t.labeling.genus[h.vertex_map.at(G.boundary.at(a))] += 1;
    h.contracted.emplace(a, b);
    h.contracted.emplace(b, a);
  }
  for (const auto& f : G.flags) {
    if (removed.count(f)) continue;
    t.graph.flags.insert(f);
    t.graph.boundary.emplace(f, h.vertex_map.at(G.boundary.at(f)));
    t.graph.involution.emplace(f, G.involution.at(f));
    t.labeling.color.emplace(f, g.labeling.color.at(f));
    h.flag_map.emplace(f, f);
  }
  t.labeling.ns_tail_labels = g.labeling.ns_tail_labels;
  t.labeling.r_tail_labels = g.labeling.r_tail_labels;
  drop_labels_of(t.labeling, removed);
  return h;
}

SusyMorphism contract_edge(const SusyGraph& g, const FlagPair& edge) {
  if (!g.graph.flags.count(edge.first) || g.graph.involution.at(edge.first) != edge.second ||
      edge.first == edge.second) {
    throw Error("contract_edge: ('" + edge.first + "','" + edge.second + "') is not an edge");
  }
  return contract(g, {sorted_pair(edge.first, edge.second)});
}

bool is_isomorphism(const SusyMorphism& h) {
  if (!h.contracted.empty()) return false;
  if (h.source.graph.flags.size() != h.target.graph.flags.size()) return false;
  if (h.source.graph.vertices.size() != h.target.graph.vertices.size()) return false;
  if (!validate_susy_morphism(h).ok()) return false;
  for (const auto& [f, s] : h.flag_map) {
    if (h.source.graph.involution.at(s) != h.flag_map.at(h.target.graph.involution.at(f))) return false;
  }
  return true;
}

SusyMorphism isomorphism(const SusyGraph& source, const SusyGraph& target, const FlagMap& flags,
                         const VertexMap& vertices) {
  SusyMorphism h{source, target, {}, vertices, {}};
  for (const auto& [s, t] : flags) {
    if (!h.flag_map.emplace(t, s).second) throw Error("isomorphism: flag bijection is not injective");
  }
  if (!is_isomorphism(h)) {
    auto report = validate_susy_morphism(h);
    throw Error("isomorphism: maps do not define an isomorphism" +
                (report.ok() ? std::string() : ": " + report.violations.front()));
  }
  return h;
}

SusyMorphism rename(const SusyGraph& g, const FlagMap& flags, const VertexMap& vertices) {
  require_valid(g, "rename");
  const auto fmap = [&](const FlagId& f) {
    auto it = flags.find(f);
    return it == flags.end() ? f : it->second;
  };
  const auto vmap = [&](const VertexId& v) {
    auto it = vertices.find(v);
    return it == vertices.end() ? v : it->second;
  };
  SusyGraph t;
  t.modular = g.modular;
  FlagMap full_flags;
  VertexMap full_vertices;
  for (const auto& v : g.graph.vertices) {
    if (!t.graph.vertices.insert(vmap(v)).second) throw Error("rename: vertex map is not injective");
    t.labeling.genus.emplace(vmap(v), g.labeling.genus.at(v));
    full_vertices.emplace(v, vmap(v));
  }
  for (const auto& f : g.graph.flags) {
    if (!t.graph.flags.insert(fmap(f)).second) throw Error("rename: flag map is not injective");
    t.graph.boundary.emplace(fmap(f), vmap(g.graph.boundary.at(f)));
    t.graph.involution.emplace(fmap(f), fmap(g.graph.involution.at(f)));
    t.labeling.color.emplace(fmap(f), g.labeling.color.at(f));
    full_flags.emplace(f, fmap(f));
  }
  for (const auto& [label, f] : g.labeling.ns_tail_labels) t.labeling.ns_tail_labels.emplace(label, fmap(f));
  for (const auto& [label, f] : g.labeling.r_tail_labels) t.labeling.r_tail_labels.emplace(label, fmap(f));
  return isomorphism(g, t, full_flags, full_vertices);
}

ElementaryKind classify(const SusyMorphism& h) {
  if (!validate_susy_morphism(h).ok()) return ElementaryKind::Composite;
  const auto pairs = pairs_of(h.contracted);
  if (pairs.empty()) {
    if (is_isomorphism(h)) return ElementaryKind::Isomorphism;
    std::set<FlagPair> joined;
    for (const auto& [a, b] : edges(h.target.graph)) {
      const auto& sa = h.flag_map.at(a);
      if (is_tail(h.source.graph, sa)) joined.insert(sorted_pair(sa, h.flag_map.at(b)));
    }
    try {
      if (graft(h.source, joined) == h) return ElementaryKind::Grafting;
    } catch (const Error&) {
    }
    return ElementaryKind::Composite;
  }
  if (pairs.size() != 1) return ElementaryKind::Composite;
  const auto& [a, b] = *pairs.begin();
  if (!(contract(h.source, pairs) == h)) return ElementaryKind::Composite;
  if (is_tail(h.source.graph, a)) return ElementaryKind::VirtualContraction;
  return h.source.graph.boundary.at(a) == h.source.graph.boundary.at(b) ? ElementaryKind::LoopContraction
                                                                         : ElementaryKind::EdgeContraction;
}

namespace {

SusyGraph union_susy(const SusyGraph& a, const SusyGraph& b) {
  SusyGraph out{union_of_disjoint(a.graph, b.graph), a.labeling, a.modular};
  if (a.modular != b.modular) throw Error("union: mixing modular and SUSY graphs");
  const auto merge = [](auto& into, const auto& from, const char* what) {
    for (const auto& kv : from) {
      if (!into.emplace(kv).second) throw Error(std::string("union: clash in ") + what);
    }
  };
  merge(out.labeling.genus, b.labeling.genus, "genus");
  merge(out.labeling.color, b.labeling.color, "color");
  merge(out.labeling.ns_tail_labels, b.labeling.ns_tail_labels, "NS labels");
  merge(out.labeling.r_tail_labels, b.labeling.r_tail_labels, "R labels");
  return out;
}

SusyGraph empty_like(const SusyGraph& g) {
  SusyGraph out;
  out.modular = g.modular;
  return out;
}

// The subgraph on `vertices` with their flags; only `kept_edges` stay edges.
SusyGraph restrict_to(const SusyGraph& g, const std::set<VertexId>& vertices, const std::set<FlagPair>& kept_edges) {
  SusyGraph out = empty_like(g);
  for (const auto& v : vertices) {
    out.graph.vertices.insert(v);
    out.labeling.genus.emplace(v, g.labeling.genus.at(v));
  }
  for (const auto& [f, v] : g.graph.boundary) {
    if (!vertices.count(v)) continue;
    out.graph.flags.insert(f);
    out.graph.boundary.emplace(f, v);
    out.graph.involution.emplace(f, f);
    out.labeling.color.emplace(f, g.labeling.color.at(f));
  }
  for (const auto& [a, b] : kept_edges) {
    out.graph.involution[a] = b;
    out.graph.involution[b] = a;
  }
  return with_flag_labels(std::move(out));
}

}  // namespace

SusyMorphism coproduct(const SusyMorphism& a, const SusyMorphism& b) {
  SusyMorphism out{union_susy(a.source, b.source), union_susy(a.target, b.target),
                   a.flag_map, a.vertex_map, a.contracted};
  out.flag_map.insert(b.flag_map.begin(), b.flag_map.end());
  out.vertex_map.insert(b.vertex_map.begin(), b.vertex_map.end());
  out.contracted.insert(b.contracted.begin(), b.contracted.end());
  return out;
}

SusyGraph vertex_corolla(const SusyGraph& g, const VertexId& v) { return restrict_to(g, {v}, {}); }

SusyMorphism total_grafting(const SusyGraph& g) {
  require_valid(g, "total_grafting");
  SusyGraph source = empty_like(g);
  for (const auto& v : g.graph.vertices) source = union_susy(source, vertex_corolla(g, v));
  return identity_maps(source, g);
}

Atomization atomize(const SusyMorphism& h) {
  auto report = validate_susy_morphism(h);
  if (!report.ok()) throw Error("atomize: invalid morphism: " + report.violations.front());
  const auto& src = h.source.graph;

  std::map<VertexId, std::set<VertexId>> preimage;
  for (const auto& w : h.target.graph.vertices) preimage[w];
  for (const auto& [v, w] : h.vertex_map) preimage[w].insert(v);
  std::set<FlagPair> contracted_edges;
  for (const auto& p : pairs_of(h.contracted)) {
    if (src.involution.at(p.first) == p.second) contracted_edges.insert(p);
  }

  Atomization out;
  SusyMorphism pieces_union{empty_like(h.source), empty_like(h.target), {}, {}, {}};
  for (const auto& [w, vs] : preimage) {
    AtomPiece piece;
    piece.vertex = w;
    std::set<FlagPair> kept;
    for (const auto& e : contracted_edges) {
      if (vs.count(src.boundary.at(e.first))) kept.insert(e);
    }
    piece.piece = restrict_to(h.source, vs, kept);
    SusyMorphism m{piece.piece, vertex_corolla(h.target, w), {}, {}, {}};
    for (const auto& f : m.target.graph.flags) m.flag_map.emplace(f, h.flag_map.at(f));
    for (const auto& v : vs) m.vertex_map.emplace(v, w);
    for (const auto& f : m.source.graph.flags) {
      auto it = h.contracted.find(f);
      if (it != h.contracted.end()) m.contracted.emplace(f, it->second);
    }
    piece.morphism = m;
    pieces_union = coproduct(pieces_union, m);
    out.pieces.push_back(std::move(piece));
  }
  out.pieces_union = pieces_union;
  out.grafting = identity_maps(pieces_union.source, h.source);
  out.total_grafting = total_grafting(h.target);
  return out;
}

bool square_commutes(const Atomization& a, const SusyMorphism& h) {
  return compose(a.pieces_union, a.total_grafting) == compose(a.grafting, h);
}

SusyMorphism compose_all(const SusyGraph& source, const std::vector<Elementary>& steps) {
  SusyMorphism acc = identity_morphism(source);
  for (const auto& step : steps) acc = compose(acc, step.morphism);
  return acc;
}

std::vector<Elementary> decompose(const SusyMorphism& h, DecompositionOrder order) {
  auto pairs = pairs_of(h.contracted);
  std::vector<FlagPair> sequence(pairs.begin(), pairs.end());
  if (order == DecompositionOrder::ReverseLexicographic) std::reverse(sequence.begin(), sequence.end());
  return decompose(h, sequence);
}

std::vector<Elementary> decompose(const SusyMorphism& h, const std::vector<FlagPair>& contraction_order) {
  auto report = validate_susy_morphism(h);
  if (!report.ok()) throw Error("decompose: invalid morphism: " + report.violations.front());
  {
    std::set<FlagPair> given;
    for (const auto& [a, b] : contraction_order) given.insert(sorted_pair(a, b));
    if (given != pairs_of(h.contracted) || given.size() != contraction_order.size()) {
      throw Error("decompose: order is not a permutation of the contracted pairs");
    }
  }
  const auto& src = h.source.graph;
  std::vector<Elementary> steps;

  std::set<FlagPair> to_graft;
  for (const auto& [a, b] : pairs_of(h.contracted)) {
    if (is_tail(src, a)) to_graft.insert({a, b});
  }
  for (const auto& [a, b] : edges(h.target.graph)) {
    const auto& sa = h.flag_map.at(a);
    const auto& sb = h.flag_map.at(b);
    if (is_tail(src, sa)) to_graft.insert(sorted_pair(sa, sb));
  }
  SusyGraph current = h.source;
  SusyMorphism acc = identity_morphism(h.source);
  if (!to_graft.empty()) {
    Elementary e;
    e.kind = ElementaryKind::Grafting;
    e.morphism = graft(current, to_graft);
    e.pairs = to_graft;
    current = e.morphism.target;
    acc = compose(acc, e.morphism);
    steps.push_back(std::move(e));
  }
  for (const auto& raw : contraction_order) {
    const FlagPair pair = sorted_pair(raw.first, raw.second);
    Elementary e;
    e.morphism = contract_edge(current, pair);
    e.kind = current.graph.boundary.at(pair.first) == current.graph.boundary.at(pair.second)
                 ? ElementaryKind::LoopContraction
                 : ElementaryKind::EdgeContraction;
    e.pairs = {pair};
    current = e.morphism.target;
    acc = compose(acc, e.morphism);
    steps.push_back(std::move(e));
  }
  if (!(current == h.target)) {
    Elementary e;
    e.kind = ElementaryKind::Isomorphism;
    for (const auto& [f, s] : h.flag_map) e.flag_bijection.emplace(s, f);
    for (const auto& [v, w] : h.vertex_map) e.vertex_bijection.emplace(acc.vertex_map.at(v), w);
    e.morphism = isomorphism(current, h.target, e.flag_bijection, e.vertex_bijection);
    steps.push_back(std::move(e));
  }
  return steps;
}

IsoContractionSquare commute_iso_contraction(const SusyMorphism& iso, const FlagPair& edge) {
  if (!is_isomorphism(iso)) throw Error("commute_iso_contraction: not an isomorphism");
  const auto& tgt = iso.target.graph;
  if (!tgt.flags.count(edge.first) || tgt.involution.at(edge.first) != edge.second || edge.first == edge.second) {
    throw Error("commute_iso_contraction: ('" + edge.first + "','" + edge.second + "') is not an edge");
  }
  const SusyMorphism con_target = contract_edge(iso.target, edge);
  const SusyMorphism con_source =
      contract_edge(iso.source, sorted_pair(iso.flag_map.at(edge.first), iso.flag_map.at(edge.second)));

  FlagMap flags;
  for (const auto& [f, s] : iso.flag_map) {
    if (con_source.target.graph.flags.count(s)) flags.emplace(s, f);
  }
  VertexMap vertices;
  for (const auto& [v, c] : con_source.vertex_map) {
    vertices.emplace(c, con_target.vertex_map.at(iso.vertex_map.at(v)));
  }
  IsoContractionSquare out;
  out.transported = isomorphism(con_source.target, con_target.target, flags, vertices);
  out.iso_then_contract = compose(iso, con_target);
  out.contract_then_iso = compose(con_source, out.transported);
  out.commutes = out.iso_then_contract == out.contract_then_iso;
  return out;
}

ContractionSquare commute_contractions(const SusyGraph& g, const FlagPair& first, const FlagPair& second) {
  const FlagPair a = sorted_pair(first.first, first.second);
  const FlagPair b = sorted_pair(second.first, second.second);
  if (a == b || a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second) {
    throw Error("commute_contractions: the two edges overlap");
  }
  const SusyMorphism ca = contract_edge(g, a);
  const SusyMorphism cab = contract_edge(ca.target, b);
  const SusyMorphism cb = contract_edge(g, b);
  const SusyMorphism cba = contract_edge(cb.target, a);
  ContractionSquare out;
  out.first_then_second = compose(ca, cab);
  out.second_then_first = compose(cb, cba);
  out.same_graph = cab.target == cba.target;
  out.commutes = out.first_then_second == out.second_then_first;
  return out;
}

}  // namespace susy

#pragma once

// Graphs as (flags, vertices, boundary, involution) and their morphisms.
//
// A morphism h: source -> target is stored as
//   flag_map    target flag -> source flag   (contravariant, injective)
//   vertex_map  source vertex -> target vertex (covariant, surjective)
//   contracted  fixed-point-free involution on the source flags that are not
//               in the image of flag_map
// Identifiers are opaque strings; graph equality is identifier-wise.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "susy/errors.hpp"

namespace susy {

using FlagId = std::string;
using VertexId = std::string;
using FlagMap = std::map<FlagId, FlagId>;
using VertexMap = std::map<VertexId, VertexId>;

/// Unordered pair of flags, normalised so that first <= second.
using FlagPair = std::pair<FlagId, FlagId>;

FlagPair sorted_pair(FlagId a, FlagId b);

/// Collects every violated invariant instead of stopping at the first one.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string message) { violations.push_back(std::move(message)); }
  void append(const ValidationReport& other, const std::string& prefix = {});
};

struct Graph {
  std::set<FlagId> flags;
  std::set<VertexId> vertices;
  std::map<FlagId, VertexId> boundary;
  std::map<FlagId, FlagId> involution;

  friend bool operator==(const Graph&, const Graph&) = default;
};

ValidationReport validate_graph(const Graph& g);

bool is_tail(const Graph& g, const FlagId& f);
std::set<FlagId> tails(const Graph& g);
std::set<FlagPair> edges(const Graph& g);
/// Throws Error for a vertex that is not in g.
std::set<FlagId> flags_at(const Graph& g, const VertexId& v);
/// Vertex -> flags for every vertex (isolated vertices map to the empty set).
std::map<VertexId, std::set<FlagId>> flags_by_vertex(const Graph& g);

/// Connected components as vertex sets, ordered by their smallest vertex.
std::vector<std::set<VertexId>> connected_components(const Graph& g);

/// A single vertex carrying the given flags, all of them tails.
Graph corolla(const VertexId& v, const std::set<FlagId>& flags);

/// Tagged disjoint union: identifiers of `a` get the prefix "0/", those of
/// `b` the prefix "1/". The empty graph is the unit.
Graph disjoint_union(const Graph& a, const Graph& b);
/// Prefixes every flag and vertex identifier of g.
Graph retag(const Graph& g, const std::string& prefix);
/// Union of two graphs whose identifiers are already disjoint; throws Error
/// on a clash.
Graph union_of_disjoint(const Graph& a, const Graph& b);

/// Orbits of a fixed-point-free involution, each reported once.
std::set<FlagPair> pairs_of(const FlagMap& involution);
FlagMap involution_from_pairs(const std::set<FlagPair>& pairs);

template <class Object>
struct Morphism {
  Object source;
  Object target;
  FlagMap flag_map;
  VertexMap vertex_map;
  FlagMap contracted;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

using GraphMorphism = Morphism<Graph>;

inline const Graph& shape(const Graph& g) { return g; }

ValidationReport validate_morphism_data(const Graph& source, const Graph& target,
                                        const FlagMap& flag_map,
                                        const VertexMap& vertex_map,
                                        const FlagMap& contracted);

/// Checks the morphism axioms: injective flag map, surjective vertex map,
/// boundary compatibility, tails pull back to tails, edges pull back to edges
/// or to tail pairs, contracted orbits are source edges or tail pairs, and no
/// mergers (vertices with a common image are joined by contracted orbits).
template <class Object>
ValidationReport validate_morphism(const Morphism<Object>& h) {
  return validate_morphism_data(shape(h.source), shape(h.target), h.flag_map, h.vertex_map,
                                h.contracted);
}

template <class Object>
Morphism<Object> identity_morphism(const Object& g) {
  Morphism<Object> id{g, g, {}, {}, {}};
  for (const auto& f : shape(g).flags) id.flag_map.emplace(f, f);
  for (const auto& v : shape(g).vertices) id.vertex_map.emplace(v, v);
  return id;
}

/// `first` followed by `second`; requires first.target == second.source.
template <class Object>
Morphism<Object> compose(const Morphism<Object>& first, const Morphism<Object>& second) {
  if (!(first.target == second.source)) {
    throw Error("compose: target of the first morphism differs from source of the second");
  }
  Morphism<Object> out{first.source, second.target, {}, {}, first.contracted};
  for (const auto& [f, mid] : second.flag_map) out.flag_map.emplace(f, first.flag_map.at(mid));
  for (const auto& [v, mid] : first.vertex_map) out.vertex_map.emplace(v, second.vertex_map.at(mid));
  for (const auto& [a, b] : second.contracted) {
    out.contracted.emplace(first.flag_map.at(a), first.flag_map.at(b));
  }
  return out;
}

}  // namespace susy

#pragma once

// Genus labelings, Neveu-Schwarz / Ramond colorings and tail labelings on top
// of plain graphs, together with the forgetful functor to modular graphs, the
// all-NS inclusion, and the coloring lift from modular graphs.
//
// Modular graphs share the SusyGraph type: `modular == true`, every flag NS,
// and all tail labels kept in `ns_tail_labels`.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "susy/graph.hpp"

namespace susy {

enum class Color { NS, R };

const char* to_string(Color c);

using Label = std::string;

struct SusyLabeling {
  std::map<VertexId, int> genus;
  std::map<FlagId, Color> color;
  std::map<Label, FlagId> ns_tail_labels;
  std::map<Label, FlagId> r_tail_labels;

  friend bool operator==(const SusyLabeling&, const SusyLabeling&) = default;
};

struct SusyGraph {
  Graph graph;
  SusyLabeling labeling;
  bool modular = false;

  friend bool operator==(const SusyGraph&, const SusyGraph&) = default;
};

inline const Graph& shape(const SusyGraph& g) { return g.graph; }

using SusyMorphism = Morphism<SusyGraph>;

/// Builds a modular graph from a plain graph and a genus labeling; every
/// tail is labeled by its own flag identifier.
SusyGraph make_modular(Graph g, std::map<VertexId, int> genus);
/// Replaces the tail labels of g by the flag identifiers of its tails.
SusyGraph with_flag_labels(SusyGraph g);

ValidationReport validate_susy_graph(const SusyGraph& g);

/// Graph axioms plus genus bookkeeping at every target vertex and color
/// preservation. With `preserve_labels` the morphism must also be bijective
/// on NS and R tails and respect both labelings.
ValidationReport validate_susy_morphism(const SusyMorphism& h, bool preserve_labels = false);

std::set<FlagId> flags_of_color(const SusyGraph& g, Color c);
std::set<FlagId> tails_of_color(const SusyGraph& g, Color c);
std::set<FlagPair> edges_of_color(const SusyGraph& g, Color c);
int flags_of_color_at(const SusyGraph& g, const VertexId& v, Color c);

/// #E - #V + #components.
int first_betti_number(const Graph& g);

/// Sum over connected components of  sum_v (g(v) - 1) + #E + 1.
int genus(const SusyGraph& g);

struct StabilityReport {
  bool stable = true;
  /// 2 g(v) - 2 + #F(v) per vertex; stable iff all positive.
  std::map<VertexId, int> excess;
};

StabilityReport stability(const SusyGraph& g);
bool is_stable(const SusyGraph& g);

/// Connected and of genus zero.
bool is_tree(const SusyGraph& g);

SusyGraph forget(const SusyGraph& g);
SusyMorphism forget(const SusyMorphism& h);
/// Requires a modular graph; returns the same graph with every flag NS.
SusyGraph include(const SusyGraph& modular_graph);
SusyMorphism include(const SusyMorphism& h);

/// Applies label bijections (NS labels and R labels separately). Labels
/// missing from a map are kept.
SusyGraph relabel_tails(const SusyGraph& g, const std::map<Label, Label>& ns,
                        const std::map<Label, Label>& r);

/// Split of the tail labels of a modular graph into NS and R labels.
struct TailPartition {
  std::set<Label> ns;
  std::set<Label> r;
};

/// The unique coloring of a stable modular tree with the given tail split,
/// found by peeling leaves. Throws Error for non-trees, unstable input, an
/// odd Ramond count or a split that does not match the tail labels.
SusyGraph lift_tree_coloring(const SusyGraph& tree, const TailPartition& partition);

/// 2^(#T - 1): the number of SUSY trees over a stable modular tree.
std::uint64_t count_lifts(const SusyGraph& tree);
/// Number of even-sized subsets of a k-element set.
std::uint64_t count_even_partitions(unsigned k);

/// Number of edge colorings of a stable modular graph satisfying the Ramond
/// parity at every vertex, for the given tail split (0 when infeasible).
std::uint64_t lift_count_general(const SusyGraph& g, const TailPartition& partition);
/// Every such coloring, as SUSY graphs, in a deterministic order.
std::vector<SusyGraph> all_lifts(const SusyGraph& g, const TailPartition& partition);

}  // namespace susy

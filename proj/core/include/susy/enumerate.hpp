#pragma once

// Canonical forms and automorphism groups of SUSY graphs, enumeration of the
// stable SUSY graphs of type (g, I_NS, I_R) up to isomorphism, and the
// contraction order on them.
//
// The canonical form comes from an individualization-refinement search over
// vertex orderings; every leaf of the search is encoded and the smallest
// encoding is the certificate. No automorphism pruning is done, so the cost
// grows with the number of vertex automorphisms. Fine for the graph sizes
// met here, not meant for large symmetric graphs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "susy/labels.hpp"

namespace susy {

struct CanonicalForm {
  std::string certificate;
  /// The canonical representative: vertices "v0", "v1", ... in canonical
  /// order, edge flags "~0", "~1", ..., tail flags named by their label
  /// (labels fixed) or "t<i>.<n|r><k>" (labels free).
  SusyGraph representative;
  /// Isomorphism from the input onto the representative.
  FlagMap flag_witness;
  VertexMap vertex_witness;
};

/// With `labels_fixed` two graphs get equal certificates iff some
/// isomorphism preserves genus, colors and every tail label; without, tails
/// of one color at a vertex are interchangeable.
CanonicalForm canonical_form(const SusyGraph& g, bool labels_fixed = true);

/// An isomorphism g1 -> g2 (as a validated morphism), or nullopt.
std::optional<SusyMorphism> are_isomorphic(const SusyGraph& g1, const SusyGraph& g2, bool labels_fixed = true);

struct Automorphism {
  FlagMap flags;        // flag -> image
  VertexMap vertices;   // vertex -> image

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

struct AutomorphismGroup {
  std::vector<Automorphism> generators;
  std::uint64_t order = 1;
};

AutomorphismGroup automorphisms(const SusyGraph& g, bool labels_fixed = true);

struct Stratum {
  SusyGraph graph;
  std::string certificate;
  /// Index into EnumerationResult::shapes.
  std::size_t shape = 0;
  /// Number of colorings of the shape representative isomorphic to this
  /// stratum.
  std::uint64_t multiplicity = 0;
};

struct ShapeRecord {
  SusyGraph shape;  // modular, canonical representative
  std::uint64_t colorings = 0;  // colorings found by the lift enumeration
  std::uint64_t expected = 0;   // lift_count_general
  int betti = 0;
};

struct EnumerationResult {
  std::vector<Stratum> strata;  // ordered by (#E, certificate)
  std::vector<ShapeRecord> shapes;
  /// Colorings before deduplication (sum of ShapeRecord::colorings).
  std::uint64_t raw_count = 0;
};

struct EnumerationLimits {
  /// Refuse parameters with 3g - 3 + #I above this.
  int max_edges = 8;
};

/// All stable SUSY graphs of genus g with NS tails labeled by `ns` and R
/// tails labeled by `r`, up to label-preserving isomorphism. Throws Error for
/// unstable parameters, an odd Ramond count, overlapping label sets, labels
/// starting with '~', or parameters beyond the limit.
EnumerationResult enumerate_strata(int g, const std::set<Label>& ns, const std::set<Label>& r,
                                   const EnumerationLimits& limits = {});

struct ContractionPoset {
  /// Number of edges of each stratum.
  std::vector<int> rank;
  /// (lower, upper): the upper stratum is a single-edge contraction of the
  /// lower one.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<std::size_t> maximal;
};

/// Cover relations between strata from single-edge contractions. Throws
/// Error if a contraction leaves the list.
ContractionPoset contraction_poset(const std::vector<Stratum>& strata);

}  // namespace susy

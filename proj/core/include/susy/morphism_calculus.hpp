#pragma once

// Elementary morphisms of SUSY graphs (graftings, isomorphisms, single edge
// and loop contractions), total graftings, atomizations, decompositions into
// elementary steps, and the two commutation squares for contractions.
//
// Identifiers created by the constructors are derived from their inputs: a
// contraction keeps flag identifiers and names each merged vertex after the
// smallest vertex identifier it absorbs.

#include <string>
#include <vector>

#include "susy/labels.hpp"

namespace susy {

enum class ElementaryKind {
  Grafting,
  Isomorphism,
  EdgeContraction,
  LoopContraction,
  VirtualContraction,
  Composite,
};

const char* to_string(ElementaryKind kind);

struct Elementary {
  ElementaryKind kind = ElementaryKind::Composite;
  SusyMorphism morphism;
  /// Grafting: the tail pairs joined. Contractions: the single pair.
  std::set<FlagPair> pairs;
  /// Isomorphism: source flag -> target flag and source vertex -> target vertex.
  FlagMap flag_bijection;
  VertexMap vertex_bijection;
};

/// Joins pairs of tails of equal color into edges. Labels of the joined
/// tails are dropped; identifiers are unchanged.
SusyMorphism graft(const SusyGraph& g, const std::set<FlagPair>& tail_pairs);

/// Contracts every given pair at once. A pair is either an edge of g or two
/// distinct tails of equal color (virtual contraction).
SusyMorphism contract(const SusyGraph& g, const std::set<FlagPair>& pairs);
SusyMorphism contract_edge(const SusyGraph& g, const FlagPair& edge);

/// Isomorphism onto the copy of g with renamed identifiers; identifiers
/// missing from the maps are kept. Tail labels travel with their flags.
SusyMorphism rename(const SusyGraph& g, const FlagMap& flags, const VertexMap& vertices);

/// Isomorphism with a prescribed target; throws Error unless the bijections
/// carry source onto target (structure, genus and colors; labels may differ).
SusyMorphism isomorphism(const SusyGraph& source, const SusyGraph& target, const FlagMap& flags,
                         const VertexMap& vertices);

bool is_isomorphism(const SusyMorphism& h);

ElementaryKind classify(const SusyMorphism& h);

/// Union of two morphisms whose identifiers are disjoint.
SusyMorphism coproduct(const SusyMorphism& a, const SusyMorphism& b);

/// The corolla of vertex v with all its flags turned into tails, labeled by
/// flag identifier.
SusyGraph vertex_corolla(const SusyGraph& g, const VertexId& v);

/// Morphism from the disjoint union of the vertex corollas onto g; identity
/// on identifiers, grafts every edge.
SusyMorphism total_grafting(const SusyGraph& g);

struct AtomPiece {
  VertexId vertex;  // target vertex
  SusyGraph piece;  // preimage subgraph, only contracted edges kept
  SusyMorphism morphism;  // piece -> corolla of `vertex`
};

struct Atomization {
  std::vector<AtomPiece> pieces;
  SusyMorphism pieces_union;    // coproduct of the piece morphisms
  SusyMorphism grafting;        // union of the pieces -> source of h
  SusyMorphism total_grafting;  // union of the target corollas -> target of h
};

Atomization atomize(const SusyMorphism& h);

/// total_grafting o (union of pieces) == h o grafting.
bool square_commutes(const Atomization& a, const SusyMorphism& h);

enum class DecompositionOrder { Lexicographic, ReverseLexicographic };

/// Grafting of all tails that h joins or contracts, then one single-pair
/// contraction per contracted orbit, then an isomorphism onto the target
/// (omitted when it would be the identity). The steps compose to h exactly.
std::vector<Elementary> decompose(const SusyMorphism& h,
                                  DecompositionOrder order = DecompositionOrder::Lexicographic);
/// Same, contracting in the given order (a permutation of h's contracted pairs).
std::vector<Elementary> decompose(const SusyMorphism& h, const std::vector<FlagPair>& contraction_order);

/// Composite of the steps, or the identity of `source` for an empty list.
SusyMorphism compose_all(const SusyGraph& source, const std::vector<Elementary>& steps);

struct IsoContractionSquare {
  SusyMorphism transported;          // the isomorphism between the contracted graphs
  SusyMorphism iso_then_contract;    // con_target(f, f') o iso
  SusyMorphism contract_then_iso;    // transported o con_source(iso^F f, iso^F f')
  bool commutes = false;
};

/// For an isomorphism `iso` and an edge of its target, the unique
/// isomorphism between the contracted graphs closing the square.
IsoContractionSquare commute_iso_contraction(const SusyMorphism& iso, const FlagPair& edge);

struct ContractionSquare {
  SusyMorphism first_then_second;
  SusyMorphism second_then_first;
  bool same_graph = false;
  bool commutes = false;
};

ContractionSquare commute_contractions(const SusyGraph& g, const FlagPair& first, const FlagPair& second);

}  // namespace susy

#pragma once

// Combinatorial nodal curves: irreducible components with genus and special
// points (punctures and node halves), a pairing of node halves, and the dual
// graph construction.

#include <string>
#include <utility>
#include <vector>

#include "susy/labels.hpp"

namespace susy {

enum class PointKind { Puncture, Node };

struct SpecialPoint {
  std::string id;
  Color color = Color::NS;
  PointKind kind = PointKind::Puncture;
  Label label;  // punctures only

  friend bool operator==(const SpecialPoint&, const SpecialPoint&) = default;
};

struct CurveComponent {
  int genus = 0;
  std::vector<SpecialPoint> special_points;

  friend bool operator==(const CurveComponent&, const CurveComponent&) = default;
};

struct CurveConfig {
  std::vector<CurveComponent> components;
  std::vector<std::pair<std::string, std::string>> node_pairing;

  friend bool operator==(const CurveConfig&, const CurveConfig&) = default;
};

/// Vertex identifier of the i-th component in every dual graph ("C0", "C1", ...).
VertexId component_vertex(std::size_t i);

/// Unique point ids, paired node halves of equal color covering every node
/// half exactly once, punctures labeled with unique labels, an even number of
/// Ramond points and 2g - 2 + #points > 0 on every component.
ValidationReport validate_curve(const CurveConfig& c);

/// Vertices are components, flags are special points, node pairs are edges,
/// punctures are tails carrying their labels. Throws Error on invalid input.
SusyGraph dual_graph(const CurveConfig& c);

/// The dual graph of the curve with colors ignored, built directly from the
/// configuration (not through dual_graph): a modular graph with every
/// puncture label in one label set.
SusyGraph modular_dual_graph(const CurveConfig& c);

/// forget(dual_graph(c)) == modular_dual_graph(c).
bool reduction_compatibility(const CurveConfig& c);

}  // namespace susy

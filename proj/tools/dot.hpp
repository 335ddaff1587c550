#pragma once

#include <string>
#include <vector>

#include "susy/labels.hpp"

namespace susy::cli {

// Graphviz rendering. NS edges solid, R edges dashed, vertices labeled
// "g=<genus>", each tail drawn as a half-edge to a point-shaped anchor.
std::string to_dot(const SusyGraph& g);
// One cluster per graph.
std::string to_dot(const std::vector<SusyGraph>& graphs);

}  // namespace susy::cli

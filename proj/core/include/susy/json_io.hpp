#pragma once

// JSON interchange for graphs, SUSY graphs, morphisms, curve configurations,
// signatures, recipes, dimensions, decompositions and strata.
//
// Readers reject unknown keys and throw ParseError on malformed data; they do
// not check the mathematical invariants (use the validate_* functions).
// Writers keep keys in a fixed order so output is byte-stable.

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "susy/dual_graph.hpp"
#include "susy/enumerate.hpp"
#include "susy/morphism_calculus.hpp"
#include "susy/operad.hpp"

namespace susy {

using Json = nlohmann::ordered_json;

/// Parses text, turning syntax errors into ParseError.
Json parse_json(const std::string& text);
Json read_json_file(const std::filesystem::path& path);

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Adds `genus`, `color` and `tail_labels`. Modular graphs are written
/// without `color`; a graph read without `color` is modular.
Json to_json(const SusyGraph& g);
/// Missing `genus` means genus 0 everywhere; missing `tail_labels` labels
/// every tail by its flag identifier. `extra_keys` are tolerated and ignored.
SusyGraph susy_graph_from_json(const Json& j, const std::vector<std::string>& extra_keys = {});

Json to_json(const SusyMorphism& h);
/// `source` and `target` are inline graph objects or strings naming a graph
/// file, resolved against `base_dir`.
SusyMorphism susy_morphism_from_json(const Json& j, const std::filesystem::path& base_dir = {});

Json to_json(const CurveConfig& c);
CurveConfig curve_from_json(const Json& j);

Json to_json(const ModuliSignature& s);
ModuliSignature signature_from_json(const Json& j);
Json to_json(const GluingRecipe& r);
GluingRecipe recipe_from_json(const Json& j);

/// {"even": n, "odd": m, "codim": [e, 0]}
Json to_json(const StratumDimension& d);

Json to_json(const ValidationReport& r);
Json to_json(const Elementary& e);
Json to_json(const std::vector<Elementary>& steps);

/// Graph object plus `certificate`.
Json to_json(const Stratum& s);
Json to_json(const ContractionPoset& p);

}  // namespace susy

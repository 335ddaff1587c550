#pragma once

// Symbolic moduli signatures and gluing recipes.
//
// A signature is a product of moduli symbols M(g, I_NS, I_R). A recipe is the
// normal form of a (weak) map between two signatures: which source factors
// end up in which target factor, which pairs of labels are glued there, how
// the surviving labels are renamed, and the rank of the odd fiber picked up
// by Ramond gluings. Recipes are kept in canonical form, so structural
// equality is recipe equality.
//
// Labels are unique across a whole signature (both colors, all factors).

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "susy/morphism_calculus.hpp"

namespace susy {

enum class Mode { Super, Classical };

const char* to_string(Mode m);

using LabelPair = std::pair<Label, Label>;

struct ModuliFactor {
  int genus = 0;
  std::set<Label> ns;
  std::set<Label> r;

  friend bool operator==(const ModuliFactor&, const ModuliFactor&) = default;
  friend auto operator<=>(const ModuliFactor& a, const ModuliFactor& b) {
    return std::tie(a.genus, a.ns, a.r) <=> std::tie(b.genus, b.ns, b.r);
  }
};

struct ModuliSignature {
  std::vector<ModuliFactor> factors;
  Mode mode = Mode::Super;

  friend bool operator==(const ModuliSignature&, const ModuliSignature&) = default;
};

/// Stability 2g - 2 + #I > 0 per factor, an even Ramond set per factor in
/// super mode, no Ramond labels in classical mode, labels unique.
ValidationReport validate_signature(const ModuliSignature& s);

/// Factors sorted; the canonical representative of the product.
ModuliSignature sorted_signature(ModuliSignature s);
/// Equality as products (factor order ignored).
bool same_signature(const ModuliSignature& a, const ModuliSignature& b);

struct GluingRecipe {
  ModuliSignature source;
  ModuliSignature target;
  /// Source factor index -> target factor index.
  std::vector<std::size_t> assignment;
  /// Per target factor.
  std::vector<std::set<LabelPair>> ns_gluings;
  std::vector<std::set<LabelPair>> r_gluings;
  /// Surviving source label -> target label.
  std::map<Label, Label> relabeling;
  int ramond_fiber_rank = 0;

  friend bool operator==(const GluingRecipe&, const GluingRecipe&) = default;
};

ValidationReport validate_recipe(const GluingRecipe& r);

/// Orders target factors by (factor, assigned source factors, gluings) and
/// source factors by (factor, target position); sorts nothing else since
/// pairs and maps are ordered containers. Idempotent.
GluingRecipe canonicalize(GluingRecipe r);

GluingRecipe identity_recipe(const ModuliSignature& s);

/// `first` followed by `second`. The target of `first` must equal the
/// source of `second` as a product. Throws Error otherwise.
GluingRecipe recipe_compose(const GluingRecipe& first, const GluingRecipe& second);

/// Product of two recipes on disjoint labels.
GluingRecipe recipe_product(const GluingRecipe& a, const GluingRecipe& b);

/// Renames labels of `s` (NS and R separately); labels missing from a map
/// are fixed. The result must again have unique labels.
GluingRecipe generator_relabel(const ModuliSignature& s, const std::map<Label, Label>& ns,
                               const std::map<Label, Label>& r);
/// Glues labels i, i' of two different factors (edge) or of one factor
/// (loop); every other factor is carried identically.
GluingRecipe generator_glue_ns(const ModuliSignature& s, const Label& i, const Label& i2);
GluingRecipe generator_glue_ns_loop(const ModuliSignature& s, const Label& i, const Label& i2);
GluingRecipe generator_glue_r(const ModuliSignature& s, const Label& j, const Label& j2);
GluingRecipe generator_glue_r_loop(const ModuliSignature& s, const Label& j, const Label& j2);

/// One factor per vertex, (g(v), NS flags at v, R flags at v), labels being
/// flag identifiers. Modular graphs give classical signatures.
ModuliSignature signature_of(const SusyGraph& g);

/// The recipe of a morphism between stable graphs: vertex map as
/// assignment, contracted orbits as gluings, flag map as relabeling.
GluingRecipe evaluate_operad(const SusyMorphism& h);

/// The recipe of one elementary step, built from the generators.
GluingRecipe evaluate_elementary(const Elementary& step);
/// Composite of the generator recipes of a decomposition of a morphism out
/// of `source`.
GluingRecipe evaluate_steps(const SusyGraph& source, const std::vector<Elementary>& steps);

ModuliSignature project(const ModuliSignature& s);
/// Colors forgotten: Ramond labels and gluings join the NS ones, the odd
/// fiber is dropped.
GluingRecipe project(const GluingRecipe& r);

struct StratumDimension {
  int even = 0;
  int odd = 0;
  int codim_even = 0;
  int codim_odd = 0;

  friend bool operator==(const StratumDimension&, const StratumDimension&) = default;
};

/// 3g-3+#T-#E  and  2g-2+#T_NS+#T_R/2.
StratumDimension dimension_closed_form(const SusyGraph& g);
/// Sums over vertices of 3g(v)-3+#F(v)  and  2g(v)-2+#F_NS(v)+#F_R(v)/2,
/// plus #E_R for the odd part.
StratumDimension dimension_per_vertex(const SusyGraph& g);
/// Both routes, checked against each other. Requires a connected stable
/// graph; throws Error on an odd Ramond count or a half-integral result.
StratumDimension stratum_dimension(const SusyGraph& g);

struct AxiomReport {
  /// Instances checked per condition (1..6).
  std::map<int, std::size_t> checked;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Randomized instances of the six compatibility conditions between
/// relabelings and NS/R loop and edge gluings, both sides compared as
/// recipes.
AxiomReport check_operad_axioms(std::uint64_t seed, std::size_t cases);

std::string describe(const ModuliSignature& s);
std::string describe(const GluingRecipe& r);

}  // namespace susy

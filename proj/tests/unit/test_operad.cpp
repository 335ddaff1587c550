#include <doctest.h>

#include "builder.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "susy/operad.hpp"

using namespace susy;
using susy::testing::Builder;

namespace {

SusyGraph dumbbell(Color edge) {
  return Builder{}
      .vertex("a")
      .vertex("b")
      .tail("1", "a")
      .tail("2", "a", edge)
      .tail("3", "b")
      .tail("4", "b", edge)
      .edge("x", "a", "y", "b", edge)
      .susy();
}

ModuliSignature sig(std::vector<ModuliFactor> f, Mode m = Mode::Super) { return {std::move(f), m}; }

}  // namespace

TEST_SUITE("operad") {

TEST_CASE("signatures") {
  CHECK(validate_signature(sig({{0, {"1", "2", "3"}, {}}})).ok());
  CHECK(validate_signature(sig({{1, {"1"}, {}}})).ok());
  CHECK(validate_signature(sig({{0, {"1"}, {"2", "3"}}})).ok());
  CHECK_FALSE(validate_signature(sig({{0, {"1", "2"}, {}}})).ok());
  CHECK_FALSE(validate_signature(sig({{0, {"1", "2"}, {"3"}}})).ok());
  CHECK_FALSE(validate_signature(sig({{0, {"1", "2"}, {"3", "4"}}}, Mode::Classical)).ok());
  CHECK_FALSE(validate_signature(sig({{0, {"1", "2", "3"}, {}}, {0, {"3", "4", "5"}, {}}})).ok());

  const auto a = sig({{1, {"9"}, {}}, {0, {"1", "2", "3"}, {}}});
  const auto b = sig({{0, {"1", "2", "3"}, {}}, {1, {"9"}, {}}});
  CHECK(same_signature(a, b));
  CHECK(sorted_signature(a) == b);
}

TEST_CASE("signature of a graph has one factor per vertex") {
  const ModuliSignature s = signature_of(dumbbell(Color::R));
  CHECK(s.mode == Mode::Super);
  REQUIRE(s.factors.size() == 2);
  CHECK(s.factors[0] == ModuliFactor{0, {"1"}, {"2", "x"}});
  CHECK(signature_of(forget(dumbbell(Color::R))).mode == Mode::Classical);
}

TEST_CASE("identity recipes are units") {
  const auto s = sig({{0, {"1", "2", "x"}, {}}, {0, {"3", "4", "y"}, {}}});
  const GluingRecipe id = identity_recipe(s);
  CHECK(validate_recipe(id).ok());
  const GluingRecipe glue = generator_glue_ns(s, "x", "y");
  CHECK(validate_recipe(glue).ok());
  CHECK(recipe_compose(id, glue) == glue);
  CHECK(recipe_compose(glue, identity_recipe(glue.target)) == glue);
  CHECK(canonicalize(glue) == glue);
}

TEST_CASE("NS edge gluing") {
  const SusyGraph g = dumbbell(Color::NS);
  const GluingRecipe r = evaluate_operad(contract_edge(g, {"x", "y"}));
  CHECK(r == generator_glue_ns(signature_of(g), "x", "y"));
  CHECK(r.ramond_fiber_rank == 0);
  REQUIRE(r.target.factors.size() == 1);
  CHECK(r.target.factors[0] == ModuliFactor{0, {"1", "2", "3", "4"}, {}});
  CHECK(r.ns_gluings[0] == std::set<LabelPair>{{"x", "y"}});
  CHECK(r.relabeling.count("x") == 0);
}

TEST_CASE("Ramond gluing adds one to the fiber rank") {
  const SusyGraph g = dumbbell(Color::R);
  const GluingRecipe r = evaluate_operad(contract_edge(g, {"x", "y"}));
  CHECK(r == generator_glue_r(signature_of(g), "x", "y"));
  CHECK(r.ramond_fiber_rank == 1);
  CHECK(r.target.factors[0] == ModuliFactor{0, {"1", "3"}, {"2", "4"}});
}

TEST_CASE("loop gluing raises the genus") {
  const auto s = sig({{0, {"1", "a", "b"}, {}}});
  const GluingRecipe r = generator_glue_ns_loop(s, "a", "b");
  CHECK(r.target.factors[0] == ModuliFactor{1, {"1"}, {}});
  CHECK_THROWS_AS(generator_glue_ns(s, "a", "b"), Error);
  const auto t = sig({{0, {"1"}, {"a", "b"}}});
  CHECK(generator_glue_r_loop(t, "a", "b").ramond_fiber_rank == 1);
}

TEST_CASE("relabeling generator") {
  const auto s = sig({{0, {"1", "2"}, {"3", "4"}}});
  const GluingRecipe r = generator_relabel(s, {{"1", "one"}}, {{"3", "three"}});
  CHECK(r.target.factors[0] == ModuliFactor{0, {"2", "one"}, {"4", "three"}});
  CHECK(r.relabeling.at("3") == "three");
  CHECK_THROWS_AS(generator_relabel(s, {{"1", "2"}}, {}), Error);
}

TEST_CASE("grafting evaluates to the identity") {
  const SusyGraph g = dumbbell(Color::R);
  const SusyMorphism h = graft(g, {{"1", "3"}});
  CHECK(evaluate_operad(h) == identity_recipe(signature_of(g)));
}

TEST_CASE("products of recipes") {
  const auto a = sig({{0, {"1", "2", "3"}, {}}});
  const auto b = sig({{1, {"4"}, {}}});
  const GluingRecipe p = recipe_product(identity_recipe(a), identity_recipe(b));
  CHECK(validate_recipe(p).ok());
  CHECK(p.source.factors.size() == 2);
  CHECK_THROWS_AS(recipe_product(identity_recipe(a), identity_recipe(a)), Error);
}

TEST_CASE("composition rejects mismatched signatures") {
  const auto a = sig({{0, {"1", "2", "3"}, {}}});
  const auto b = sig({{0, {"1", "2", "4"}, {}}});
  CHECK_THROWS_AS(recipe_compose(identity_recipe(a), identity_recipe(b)), Error);
}

TEST_CASE("evaluation is functorial on random composable pairs") {
  testing::Rng rng(41);
  for (int k = 0; k < 60; ++k) {
    const SusyGraph g = testing::random_susy_graph(rng, 5);
    const SusyMorphism h = testing::random_morphism(rng, g, "a.");
    const SusyMorphism f = testing::random_morphism(rng, h.target, "b.");
    CHECK(evaluate_operad(compose(h, f)) == recipe_compose(evaluate_operad(h), evaluate_operad(f)));
    CHECK(evaluate_steps(h.source, decompose(h)) == evaluate_operad(h));
    CHECK(project(evaluate_operad(h)) == evaluate_operad(forget(h)));
  }
}

TEST_CASE("projection forgets colors and fiber") {
  const GluingRecipe r = evaluate_operad(contract_edge(dumbbell(Color::R), {"x", "y"}));
  const GluingRecipe p = project(r);
  CHECK(p.ramond_fiber_rank == 0);
  CHECK(p.target.mode == Mode::Classical);
  CHECK(p.target.factors[0] == ModuliFactor{0, {"1", "2", "3", "4"}, {}});
  CHECK(p.ns_gluings[0] == std::set<LabelPair>{{"x", "y"}});
}

TEST_CASE("dimensions of small strata") {
  CHECK(stratum_dimension(testing::ns_corolla(4)) == StratumDimension{1, 2, 0, 0});
  CHECK(stratum_dimension(testing::ns_corolla(1, 1)) == StratumDimension{1, 1, 0, 0});
  CHECK(stratum_dimension(testing::ns_corolla(3)) == StratumDimension{0, 1, 0, 0});
  const SusyGraph mixed = Builder{}.vertex("v").tail("1", "v").tail("2", "v").tail("3", "v", Color::R).tail("4", "v", Color::R).susy();
  CHECK(stratum_dimension(mixed) == StratumDimension{1, 1, 0, 0});
  // 4 tails split 2+2 with a Ramond edge: codimension one, odd part unchanged.
  CHECK(stratum_dimension(dumbbell(Color::R)) == StratumDimension{0, 1, 1, 0});
  CHECK(stratum_dimension(dumbbell(Color::NS)) == StratumDimension{0, 2, 1, 0});
}

TEST_CASE("dimension refuses disconnected or unstable graphs") {
  const SusyGraph two = Builder{}.vertex("a").vertex("b").tail("1", "a").tail("2", "a").tail("3", "a").tail("4", "b").tail("5", "b").tail("6", "b").susy();
  CHECK_THROWS_AS(stratum_dimension(two), Error);
  CHECK_THROWS_AS(stratum_dimension(testing::ns_corolla(2)), Error);
}

TEST_CASE("closed form and per-vertex sums agree on random graphs") {
  testing::Rng rng(8);
  for (int k = 0; k < 200; ++k) {
    const SusyGraph g = testing::random_susy_graph(rng);
    CHECK(dimension_closed_form(g) == dimension_per_vertex(g));
  }
}

TEST_CASE("axiom families pass") {
  const AxiomReport r = check_operad_axioms(1, 25);
  CHECK(r.ok());
  REQUIRE(r.checked.size() == 6);
  for (const auto& [condition, n] : r.checked) CHECK(n >= 25);
  CHECK(check_operad_axioms(1, 0).checked.empty());
}

TEST_CASE("describe is readable") {
  const auto s = sig({{0, {"1", "2", "3"}, {}}});
  CHECK(describe(s).find("super") == 0);
  CHECK_FALSE(describe(identity_recipe(s)).empty());
}

}  // TEST_SUITE

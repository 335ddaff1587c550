#include <doctest.h>

#include <map>

#include "builder.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "susy/morphism_calculus.hpp"

using namespace susy;
using susy::testing::Builder;

// The reference implementations are checked on cases small enough to count
// by hand before they are trusted as oracles elsewhere.
TEST_SUITE("oracles") {

TEST_CASE("spanning forest betti number") {
  const SusyGraph g = Builder{}
                          .vertex("a")
                          .vertex("b")
                          .vertex("c")
                          .edge("1", "a", "2", "b")
                          .edge("3", "b", "4", "c")
                          .edge("5", "c", "6", "a")
                          .edge("7", "c", "8", "c")
                          .susy();
  CHECK(testing::betti_by_spanning_forest(g.graph) == 2);
}

TEST_CASE("brute-force colorings") {
  // single loop at a vertex with two tails: the loop is free, tails fixed
  const SusyGraph m = Builder{}.vertex("v").tail("1", "v").tail("2", "v").edge("a", "v", "b", "v").modular();
  CHECK(testing::colorings_by_search(m, {{"1", "2"}, {}}).size() == 2);
  CHECK(testing::colorings_by_search(m, {{}, {"1", "2"}}).size() == 2);
  CHECK(testing::colorings_by_search(m, {{"1"}, {"2"}}).empty());
}

TEST_CASE("flag-level automorphism search") {
  const SusyGraph loops = Builder{}.vertex("v").tail("1", "v").edge("a", "v", "b", "v").edge("c", "v", "d", "v").susy();
  CHECK(testing::automorphisms_by_search(loops) == 8);
  const SusyGraph corolla = testing::ns_corolla(4);
  CHECK(testing::automorphisms_by_search(corolla) == 1);
  CHECK(testing::automorphisms_by_search(corolla, false) == 24);
  SusyGraph mixed = corolla;
  mixed.labeling.color["1"] = mixed.labeling.color["2"] = Color::R;
  CHECK(testing::automorphisms_by_search(mixed, false) == 4);
}

TEST_CASE("vertex-level isomorphism search") {
  const SusyGraph a = Builder{}.vertex("u").vertex("w").tail("1", "u").tail("2", "w").edge("x", "u", "y", "w").edge("p", "u", "q", "w").susy();
  const SusyGraph b = Builder{}.vertex("A").vertex("B").tail("1", "B").tail("2", "A").edge("x", "A", "y", "B").edge("p", "B", "q", "A").susy();
  CHECK(testing::isomorphic_by_search(a, b));
  SusyGraph c = b;
  c.labeling.color["x"] = c.labeling.color["y"] = Color::R;
  CHECK_FALSE(testing::isomorphic_by_search(a, c));
}

TEST_CASE("brute-force strata of small moduli spaces") {
  // M(0,4): corolla and three splits; M(0,5): 1 + 10 + 15; M(1,1): corolla
  // and the NS and R loops
  CHECK(testing::strata_by_search(0, {"1", "2", "3", "4"}, {}).size() == 4);
  CHECK(testing::strata_by_search(0, {"1", "2", "3", "4", "5"}, {}).size() == 26);
  CHECK(testing::strata_by_search(1, {"1"}, {}).size() == 3);
  CHECK(testing::strata_by_search(0, {"1", "2"}, {"3", "4"}).size() == 4);
}

}  // TEST_SUITE

TEST_SUITE("oracles") {

TEST_CASE("random generators reach every kind of step") {
  testing::Rng rng(1);
  std::map<ElementaryKind, int> kinds;
  int ramond_gluings = 0;
  for (int k = 0; k < 200; ++k) {
    const SusyGraph g = testing::random_susy_graph(rng, 6);
    const SusyMorphism h = testing::random_morphism(rng, g, "c.");
    for (const auto& step : decompose(h)) {
      ++kinds[step.kind];
      if (!step.pairs.empty() && step.kind != ElementaryKind::Grafting &&
          step.morphism.source.labeling.color.at(step.pairs.begin()->first) == Color::R) {
        ++ramond_gluings;
      }
    }
  }
  MESSAGE("grafting " << kinds[ElementaryKind::Grafting] << ", edge " << kinds[ElementaryKind::EdgeContraction]
                      << ", loop " << kinds[ElementaryKind::LoopContraction] << ", iso "
                      << kinds[ElementaryKind::Isomorphism] << ", ramond " << ramond_gluings);
  CHECK(kinds[ElementaryKind::Grafting] > 20);
  CHECK(kinds[ElementaryKind::EdgeContraction] > 20);
  CHECK(kinds[ElementaryKind::LoopContraction] > 20);
  CHECK(kinds[ElementaryKind::Isomorphism] > 20);
  CHECK(ramond_gluings > 20);

  int deep = 0;
  for (int k = 0; k < 200; ++k) deep += testing::random_stable_tree(rng, 10).graph.vertices.size() >= 4;
  CHECK(deep > 50);
}

}  // TEST_SUITE

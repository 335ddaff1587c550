#include <doctest.h>

#include <map>

#include "builder.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "susy/enumerate.hpp"

using namespace susy;
using susy::testing::Builder;

namespace {

SusyGraph shuffled_copy(testing::Rng& rng, const SusyGraph& g) {
  std::vector<FlagId> flags(g.graph.flags.begin(), g.graph.flags.end());
  std::vector<VertexId> vertices(g.graph.vertices.begin(), g.graph.vertices.end());
  rng.shuffle(flags);
  rng.shuffle(vertices);
  FlagMap fm;
  VertexMap vm;
  for (std::size_t i = 0; i < flags.size(); ++i) fm[flags[i]] = "F" + std::to_string(i);
  for (std::size_t i = 0; i < vertices.size(); ++i) vm[vertices[i]] = "V" + std::to_string(i);
  return rename(g, fm, vm).target;
}

std::set<Label> labels(int from, int to) {
  std::set<Label> out;
  for (int i = from; i <= to; ++i) out.insert(std::to_string(i));
  return out;
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("certificates ignore identifiers") {
  testing::Rng rng(12);
  for (int k = 0; k < 100; ++k) {
    const SusyGraph g = testing::random_susy_graph(rng, 5);
    const SusyGraph h = shuffled_copy(rng, g);
    const CanonicalForm a = canonical_form(g);
    const CanonicalForm b = canonical_form(h);
    CHECK(a.certificate == b.certificate);
    CHECK(a.representative == b.representative);
    CHECK(canonical_form(g, false).certificate == canonical_form(h, false).certificate);
    const auto iso = are_isomorphic(g, h);
    REQUIRE(iso.has_value());
    CHECK(iso->source == g);
    CHECK(iso->target == h);
  }
}

TEST_CASE("certificates separate non-isomorphic graphs") {
  testing::Rng rng(13);
  int agree = 0;
  for (int k = 0; k < 300; ++k) {
    const SusyGraph a = testing::random_susy_graph(rng, 3);
    const SusyGraph b = testing::random_susy_graph(rng, 3);
    for (bool fixed : {true, false}) {
      const bool brute = testing::isomorphic_by_search(a, b, fixed);
      CHECK(brute == (canonical_form(a, fixed).certificate == canonical_form(b, fixed).certificate));
      CHECK(brute == are_isomorphic(a, b, fixed).has_value());
      agree += brute;
    }
  }
  CHECK(agree > 0);
}

TEST_CASE("labels matter only when fixed") {
  const SusyGraph a = Builder{}
                          .vertex("a")
                          .vertex("b")
                          .tail("1", "a")
                          .tail("2", "a")
                          .tail("3", "b")
                          .tail("4", "b")
                          .edge("x", "a", "y", "b")
                          .susy();
  const SusyGraph b = relabel_tails(a, {{"2", "3"}, {"3", "2"}}, {});
  CHECK(canonical_form(a).certificate != canonical_form(b).certificate);
  CHECK(canonical_form(a, false).certificate == canonical_form(b, false).certificate);
}

TEST_CASE("automorphism group order against flag-level search") {
  testing::Rng rng(14);
  for (int k = 0; k < 80; ++k) {
    const SusyGraph g = testing::random_susy_graph(rng, 4);
    for (bool fixed : {true, false}) {
      const AutomorphismGroup aut = automorphisms(g, fixed);
      CHECK(aut.order == testing::automorphisms_by_search(g, fixed));
      for (const auto& a : aut.generators) {
        CHECK_NOTHROW(isomorphism(g, g, a.flags, a.vertices));
      }
    }
  }
}

TEST_CASE("automorphisms of loops and parallel edges") {
  const SusyGraph loops = Builder{}.vertex("v").tail("1", "v").edge("a", "v", "b", "v").edge("c", "v", "d", "v").susy();
  CHECK(automorphisms(loops).order == 8);
  const SusyGraph banana = Builder{}
                               .vertex("u")
                               .vertex("w")
                               .tail("1", "u")
                               .tail("2", "w")
                               .edge("a", "u", "b", "w")
                               .edge("c", "u", "d", "w")
                               .edge("e", "u", "f", "w")
                               .susy();
  CHECK(automorphisms(banana).order == 6);
  CHECK(automorphisms(banana, false).order == 12);
}

TEST_CASE("strata counts at desk scale") {
  struct Case {
    int g;
    std::set<Label> ns, r;
    std::size_t count;
  };
  const std::vector<Case> cases{{0, labels(1, 4), {}, 4}, {0, labels(1, 2), labels(3, 4), 4}, {1, labels(1, 1), {}, 3},
                                {0, labels(1, 5), {}, 26}, {1, labels(1, 2), {}, 0}, {0, labels(1, 3), labels(4, 5), 0}};
  for (const auto& c : cases) {
    const EnumerationResult res = enumerate_strata(c.g, c.ns, c.r);
    const auto brute = testing::strata_by_search(c.g, c.ns, c.r);
    CHECK(res.strata.size() == brute.size());
    if (c.count) CHECK(res.strata.size() == c.count);
    std::map<int, int> by_edges_lib, by_edges_brute;
    for (const auto& s : res.strata) ++by_edges_lib[static_cast<int>(edges(s.graph.graph).size())];
    for (const auto& s : brute) ++by_edges_brute[s.edges];
    CHECK(by_edges_lib == by_edges_brute);
  }
}

TEST_CASE("higher genus strata agree with brute force") {
  struct Case {
    int g;
    std::set<Label> ns, r;
  };
  const std::vector<Case> cases{{1, labels(1, 2), {}},        {1, labels(1, 3), {}}, {2, labels(1, 1), {}},
                                {2, {}, labels(1, 2)},        {1, labels(1, 1), labels(2, 3)},
                                {0, labels(1, 4), labels(5, 6)}};
  for (const auto& c : cases) {
    CAPTURE(c.g);
    CAPTURE(c.ns.size());
    CAPTURE(c.r.size());
    CHECK(enumerate_strata(c.g, c.ns, c.r).strata.size() == testing::strata_by_search(c.g, c.ns, c.r).size());
  }
}

TEST_CASE("stratum records are consistent") {
  const EnumerationResult res = enumerate_strata(1, labels(1, 1), labels(2, 3));
  REQUIRE_FALSE(res.strata.empty());
  std::map<std::size_t, std::uint64_t> per_shape;
  std::uint64_t total = 0;
  for (const auto& s : res.strata) {
    CHECK(validate_susy_graph(s.graph).ok());
    CHECK(is_stable(s.graph));
    CHECK(genus(s.graph) == 1);
    CHECK(canonical_form(s.graph).certificate == s.certificate);
    per_shape[s.shape] += s.multiplicity;
    total += s.multiplicity;
    // orbit-stabilizer: colorings in the class = |Aut(shape)| / |Aut(stratum)|
    const auto& shape = res.shapes.at(s.shape).shape;
    CHECK(s.multiplicity * automorphisms(s.graph).order == automorphisms(shape).order);
  }
  CHECK(total == res.raw_count);
  for (std::size_t i = 0; i < res.shapes.size(); ++i) {
    const auto& rec = res.shapes[i];
    CHECK(rec.colorings == rec.expected);
    CHECK(rec.colorings == (std::uint64_t{1} << rec.betti));
    CHECK(per_shape[i] == rec.colorings);
  }
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(enumerate_strata(0, labels(1, 2), {}), Error);
  CHECK_THROWS_AS(enumerate_strata(0, labels(1, 3), labels(4, 4)), Error);
  CHECK_THROWS_AS(enumerate_strata(0, labels(1, 3), labels(3, 4)), Error);
  CHECK_THROWS_AS(enumerate_strata(0, {"~1", "2", "3"}, {}), Error);
  CHECK_THROWS_AS(enumerate_strata(0, labels(1, 6), {}, {2}), Error);
  CHECK_NOTHROW(enumerate_strata(0, labels(1, 5), {}, {2}));
}

TEST_CASE("contraction poset of M(0,4)") {
  const EnumerationResult res = enumerate_strata(0, labels(1, 4), {});
  const ContractionPoset p = contraction_poset(res.strata);
  REQUIRE(p.rank.size() == 4);
  CHECK(p.covers.size() == 3);
  REQUIRE(p.maximal.size() == 1);
  CHECK(p.rank[p.maximal[0]] == 0);
  for (const auto& [lo, hi] : p.covers) CHECK(p.rank[lo] == p.rank[hi] + 1);
}

TEST_CASE("contraction poset of M(0,5)") {
  const EnumerationResult res = enumerate_strata(0, labels(1, 5), {});
  const ContractionPoset p = contraction_poset(res.strata);
  // each of the 15 two-edge trees contracts onto two one-edge trees, each of
  // the 10 one-edge trees onto the corolla
  CHECK(p.covers.size() == 15 * 2 + 10);
}

}  // TEST_SUITE

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "cli.hpp"
#include "dot.hpp"
#include "generators.hpp"
#include "susy/json_io.hpp"

using namespace susy;

namespace {

const std::filesystem::path golden_dir{SUSYKIT_GOLDEN_DIR};

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) { return (golden_dir / name).string(); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Compares against tests/golden/<name>; SUSYKIT_UPDATE_GOLDEN=1 rewrites it.
void check_golden(const Outcome& o, const std::string& name) {
  const auto path = golden_dir / name;
  if (const char* update = std::getenv("SUSYKIT_UPDATE_GOLDEN"); update && std::string(update) == "1") {
    std::ofstream(path) << o.out;
  }
  REQUIRE_MESSAGE(std::filesystem::exists(path), "missing golden file " << name);
  CHECK(o.out == slurp(path));
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

// Restores an environment variable on scope exit.
class EnvGuard {
 public:
  EnvGuard(const char* name, const char* value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    if (value) setenv(name, value, 1);
    else unsetenv(name);
  }
  ~EnvGuard() {
    if (old_) setenv(name_, old_->c_str(), 1);
    else unsetenv(name_);
  }

 private:
  const char* name_;
  std::optional<std::string> old_;
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("dims of the four-tail corolla") {
  const Outcome o = invoke({"dims", golden("corolla4.json")});
  CHECK(o.code == 0);
  CHECK(o.out == "{\"even\":1,\"odd\":2,\"codim\":[0,0]}\n");
  check_golden(o, "dims_corolla4.out");
}

TEST_CASE("stdin input") {
  const Outcome o = invoke({"dims", "-"}, slurp(golden("corolla4.json")));
  CHECK(o.code == 0);
  CHECK(o.out == invoke({"dims", golden("corolla4.json")}).out);
  CHECK(invoke({"dims"}, slurp(golden("corolla4.json"))).out == o.out);
}

TEST_CASE("validate") {
  const Outcome good = invoke({"validate", golden("corolla4.json")});
  CHECK(good.code == 0);
  CHECK(good.out == "{\"valid\":true,\"violations\":[]}\n");

  const Outcome bad = invoke({"validate", golden("broken_involution.json")});
  CHECK(bad.code == 1);
  const Json report = parse_json(bad.out);
  CHECK(report["valid"] == false);
  CHECK_FALSE(report["violations"].empty());
  check_golden(bad, "validate_broken.out");

  const Outcome morphism = invoke({"validate", golden("contract_r.json")});
  CHECK(morphism.code == 0);
}

TEST_CASE("malformed input and usage errors exit 2") {
  CHECK(invoke({"dims", golden("malformed.json")}).code == 2);
  CHECK(invoke({"dims", golden("no_such_file.json")}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"--format", "xml", "dims", golden("corolla4.json")}).code == 2);
  CHECK(invoke({"--format", "dot", "dims", golden("corolla4.json")}).code == 2);
  CHECK(invoke({"check-axioms", "--cases", "0"}).code == 2);
  const Outcome o = invoke({"validate", "-"}, R"({"flags":[],"vertices":[],"boundary":{},"involution":{},"oops":1})");
  CHECK(o.code == 2);
  CHECK(o.err.find("oops") != std::string::npos);
}

TEST_CASE("help exits 0") {
  const Outcome o = invoke({"--help"});
  CHECK(o.code == 0);
  CHECK(o.out.find("enumerate") != std::string::npos);
}

TEST_CASE("lift") {
  const Outcome o = invoke({"lift", "--tree", golden("tree6.json"), "--ns", "1,3,4,5", "--r", "2,6"});
  CHECK(o.code == 0);
  const SusyGraph g = susy_graph_from_json(parse_json(o.out));
  CHECK(g.labeling.color.at("a") == Color::R);
  CHECK(g.labeling.color.at("c") == Color::R);
  CHECK(validate_susy_graph(g).ok());
  check_golden(o, "lift_tree6.out");

  const Outcome odd = invoke({"lift", "--tree", golden("tree6.json"), "--ns", "1,3,4", "--r", "2,5,6"});
  CHECK(odd.code == 1);
  CHECK(parse_json(odd.out)["valid"] == false);
}

TEST_CASE("dual-graph") {
  const Outcome o = invoke({"dual-graph", golden("curve2.json")});
  CHECK(o.code == 0);
  check_golden(o, "dual_curve2.out");
  const Outcome table = invoke({"--format", "table", "dual-graph", golden("curve2.json")});
  CHECK(table.code == 0);
  check_golden(table, "dual_curve2.table");
}

TEST_CASE("enumerate") {
  const Outcome o = invoke({"enumerate", "--genus", "0", "--ns", "4", "--r", "0"});
  CHECK(o.code == 0);
  const Json j = parse_json(o.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 4);
  check_golden(o, "enumerate_0_4_0.out");

  const Outcome table = invoke({"--format", "table", "enumerate", "--genus", "1", "--ns", "1", "--r", "0"});
  CHECK(table.out.rfind("3 strata\n", 0) == 0);

  const Outcome poset = invoke({"enumerate", "--genus", "0", "--ns", "2", "--r", "2", "--poset"});
  const Json p = parse_json(poset.out);
  CHECK(p["strata"].size() == 4);
  CHECK(p["poset"].size() == 4);
  check_golden(poset, "enumerate_0_2_2_poset.out");
}

TEST_CASE("enumeration limit: flag, environment, default") {
  {
    EnvGuard env("SUSY_KIT_MAX_EDGES", nullptr);
    CHECK(invoke({"enumerate", "--genus", "0", "--ns", "5"}).code == 0);
    CHECK(invoke({"enumerate", "--genus", "0", "--ns", "5", "--max-edges", "1"}).code == 1);
  }
  {
    EnvGuard env("SUSY_KIT_MAX_EDGES", "1");
    CHECK(invoke({"enumerate", "--genus", "0", "--ns", "5"}).code == 1);
    CHECK(invoke({"enumerate", "--genus", "0", "--ns", "5", "--max-edges", "2"}).code == 0);
  }
  {
    EnvGuard env("SUSY_KIT_MAX_EDGES", "many");
    CHECK(invoke({"enumerate", "--genus", "0", "--ns", "5"}).code == 2);
  }
}

TEST_CASE("evaluate and decompose") {
  const Outcome o = invoke({"evaluate", golden("contract_r.json")});
  CHECK(o.code == 0);
  const GluingRecipe r = recipe_from_json(parse_json(o.out));
  CHECK(r.ramond_fiber_rank == 1);
  check_golden(o, "evaluate_contract_r.out");

  const Outcome steps = invoke({"decompose", golden("contract_r.json")});
  CHECK(steps.code == 0);
  check_golden(steps, "decompose_contract_r.out");
  CHECK(invoke({"decompose", "--reverse", golden("contract_r.json")}).code == 0);
}

TEST_CASE("check-axioms is reproducible") {
  const Outcome a = invoke({"check-axioms", "--seed", "3", "--cases", "10"});
  const Outcome b = invoke({"check-axioms", "--seed", "3", "--cases", "10"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Json j = parse_json(a.out);
  CHECK(j["ok"] == true);
  CHECK(j["checked"].size() == 6);
  check_golden(a, "check_axioms_3_10.out");
}

TEST_CASE("export-dot") {
  const Outcome o = invoke({"export-dot", golden("dumbbell_r.json")});
  CHECK(o.code == 0);
  check_golden(o, "dumbbell_r.dot");
  // 2 vertices + 4 tail anchors, 4 tail half-edges + 1 edge, R drawn dashed
  CHECK(count(o.out, "[label=\"g=") == 2);
  CHECK(count(o.out, "[shape=point]") == 4);
  CHECK(count(o.out, " -- ") == 5);
  CHECK(count(o.out, "style=dashed") == 3);

  const Outcome strata = invoke({"enumerate", "--genus", "0", "--ns", "5"});
  const Outcome dot = invoke({"export-dot", "-"}, strata.out);
  CHECK(dot.code == 0);
  CHECK(count(dot.out, "subgraph cluster_") == 26);
  CHECK(dot.out == invoke({"--format", "dot", "enumerate", "--genus", "0", "--ns", "5"}).out);
}

TEST_CASE("DOT output keeps vertex and edge counts") {
  testing::Rng rng(31);
  for (int k = 0; k < 30; ++k) {
    const SusyGraph g = testing::random_susy_graph(rng);
    const std::string dot = cli::to_dot(g);
    CHECK(count(dot, "[label=\"g=") == g.graph.vertices.size());
    CHECK(count(dot, " -- ") == edges(g.graph).size() + tails(g.graph).size());
    CHECK(count(dot, "style=dashed") ==
          edges_of_color(g, Color::R).size() + tails_of_color(g, Color::R).size());
  }
}

TEST_CASE("invalid curve reports violations") {
  const Outcome o = invoke({"dual-graph", "-"}, R"({"components":[{"genus":0,"special_points":[
      {"id":"a","color":"NS","kind":"puncture","label":"1"}]}],"node_pairing":[]})");
  CHECK(o.code == 1);
  CHECK(parse_json(o.out)["valid"] == false);
}

}  // TEST_SUITE

#include "susy/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace susy {

namespace {

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& what,
                const std::vector<std::string>& extra = {}) {
  if (!j.is_object()) throw ParseError(what + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; }) ||
                       std::find(extra.begin(), extra.end(), key) != extra.end();
    if (!known) throw ParseError(what + ": unknown key '" + key + "'");
  }
}

const Json& require(const Json& j, const char* key, const std::string& what) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(what + ": missing key '" + key + "'");
  return *it;
}

std::string identifier(const Json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError(what + ": identifiers must be strings or integers");
}

int integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + ": expected an integer");
  return j.get<int>();
}

std::set<std::string> id_set(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array");
  std::set<std::string> out;
  for (const auto& x : j) {
    if (!out.insert(identifier(x, what)).second) throw ParseError(what + ": duplicate entry");
  }
  return out;
}

std::map<std::string, std::string> id_map(const Json& j, const std::string& what) {
  if (!j.is_object()) throw ParseError(what + ": expected an object");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) out.emplace(k, identifier(v, what));
  return out;
}

std::pair<std::string, std::string> id_pair(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw ParseError(what + ": expected a two-element array");
  return {identifier(j[0], what), identifier(j[1], what)};
}

Color color_of(const Json& j, const std::string& what) {
  if (j == "NS") return Color::NS;
  if (j == "R") return Color::R;
  throw ParseError(what + ": color must be \"NS\" or \"R\"");
}

Json pair_json(const std::pair<std::string, std::string>& p) { return Json::array({p.first, p.second}); }

template <class T>
T guarded(const char* what, T (*body)(const Json&, const std::string&), const Json& j) {
  try {
    return body(j, what);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Graph read_graph(const Json& j, const std::string& what) {
  Graph g;
  g.flags = id_set(require(j, "flags", what), what + ".flags");
  g.vertices = id_set(require(j, "vertices", what), what + ".vertices");
  g.boundary = id_map(require(j, "boundary", what), what + ".boundary");
  g.involution = id_map(require(j, "involution", what), what + ".involution");
  return g;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Json to_json(const Graph& g) {
  Json j;
  j["flags"] = g.flags;
  j["vertices"] = g.vertices;
  j["boundary"] = g.boundary;
  j["involution"] = g.involution;
  return j;
}

Graph graph_from_json(const Json& j) {
  return guarded<Graph>("graph", [](const Json& j, const std::string& what) {
    check_keys(j, {"flags", "vertices", "boundary", "involution"}, what);
    return read_graph(j, what);
  }, j);
}

Json to_json(const SusyGraph& g) {
  Json j = to_json(g.graph);
  j["genus"] = g.labeling.genus;
  if (!g.modular) {
    Json colors = Json::object();
    for (const auto& [f, c] : g.labeling.color) colors[f] = to_string(c);
    j["color"] = colors;
  }
  j["tail_labels"] = {{"NS", g.labeling.ns_tail_labels}, {"R", g.labeling.r_tail_labels}};
  return j;
}

SusyGraph susy_graph_from_json(const Json& j, const std::vector<std::string>& extra_keys) {
  try {
    const std::string what = "graph";
    check_keys(j, {"flags", "vertices", "boundary", "involution", "genus", "color", "tail_labels"}, what, extra_keys);
    SusyGraph g;
    g.graph = read_graph(j, what);
    if (auto it = j.find("genus"); it != j.end()) {
      if (!it->is_object()) throw ParseError("graph.genus: expected an object");
      for (const auto& [v, k] : it->items()) g.labeling.genus.emplace(v, integer(k, "graph.genus"));
    } else {
      for (const auto& v : g.graph.vertices) g.labeling.genus.emplace(v, 0);
    }
    if (auto it = j.find("color"); it != j.end()) {
      if (!it->is_object()) throw ParseError("graph.color: expected an object");
      for (const auto& [f, c] : it->items()) g.labeling.color.emplace(f, color_of(c, "graph.color"));
    } else {
      g.modular = true;
      for (const auto& f : g.graph.flags) g.labeling.color.emplace(f, Color::NS);
    }
    if (auto it = j.find("tail_labels"); it != j.end()) {
      check_keys(*it, {"NS", "R"}, "graph.tail_labels");
      if (auto ns = it->find("NS"); ns != it->end()) g.labeling.ns_tail_labels = id_map(*ns, "graph.tail_labels.NS");
      if (auto r = it->find("R"); r != it->end()) g.labeling.r_tail_labels = id_map(*r, "graph.tail_labels.R");
    } else {
      for (const auto& [f, partner] : g.graph.involution) {
        if (f != partner || !g.graph.flags.count(f)) continue;
        auto c = g.labeling.color.find(f);
        const bool ramond = c != g.labeling.color.end() && c->second == Color::R;
        (ramond ? g.labeling.r_tail_labels : g.labeling.ns_tail_labels).emplace(f, f);
      }
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph: ") + e.what());
  }
}

Json to_json(const SusyMorphism& h) {
  Json j;
  j["source"] = to_json(h.source);
  j["target"] = to_json(h.target);
  j["flag_map"] = h.flag_map;
  j["vertex_map"] = h.vertex_map;
  Json pairs = Json::array();
  for (const auto& p : pairs_of(h.contracted)) pairs.push_back(pair_json(p));
  j["contracted_pairs"] = pairs;
  return j;
}

SusyMorphism susy_morphism_from_json(const Json& j, const std::filesystem::path& base_dir) {
  try {
    const std::string what = "morphism";
    check_keys(j, {"source", "target", "flag_map", "vertex_map", "contracted_pairs"}, what);
    const auto endpoint = [&](const char* key) {
      const Json& e = require(j, key, what);
      if (e.is_string()) return susy_graph_from_json(read_json_file(base_dir / e.get<std::string>()));
      return susy_graph_from_json(e);
    };
    SusyMorphism h;
    h.source = endpoint("source");
    h.target = endpoint("target");
    h.flag_map = id_map(require(j, "flag_map", what), "morphism.flag_map");
    h.vertex_map = id_map(require(j, "vertex_map", what), "morphism.vertex_map");
    if (auto it = j.find("contracted_pairs"); it != j.end()) {
      if (!it->is_array()) throw ParseError("morphism.contracted_pairs: expected an array");
      for (const auto& p : *it) {
        auto [a, b] = id_pair(p, "morphism.contracted_pairs");
        if (!h.contracted.emplace(a, b).second || !h.contracted.emplace(b, a).second) {
          throw ParseError("morphism.contracted_pairs: flag '" + (h.contracted.count(a) ? a : b) +
                           "' appears in two pairs or pairs with itself");
        }
      }
    }
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("morphism: ") + e.what());
  }
}

Json to_json(const CurveConfig& c) {
  Json comps = Json::array();
  for (const auto& comp : c.components) {
    Json points = Json::array();
    for (const auto& p : comp.special_points) {
      Json jp;
      jp["id"] = p.id;
      jp["color"] = to_string(p.color);
      jp["kind"] = p.kind == PointKind::Puncture ? "puncture" : "node";
      if (p.kind == PointKind::Puncture) jp["label"] = p.label;
      points.push_back(jp);
    }
    comps.push_back({{"genus", comp.genus}, {"special_points", points}});
  }
  Json pairing = Json::array();
  for (const auto& p : c.node_pairing) pairing.push_back(pair_json(p));
  return {{"components", comps}, {"node_pairing", pairing}};
}

CurveConfig curve_from_json(const Json& j) {
  try {
    check_keys(j, {"components", "node_pairing"}, "curve");
    CurveConfig c;
    const Json& comps = require(j, "components", "curve");
    if (!comps.is_array()) throw ParseError("curve.components: expected an array");
    for (const auto& jc : comps) {
      check_keys(jc, {"genus", "special_points"}, "curve.components[]");
      CurveComponent comp;
      comp.genus = integer(require(jc, "genus", "curve.components[]"), "curve.components[].genus");
      const Json& pts = require(jc, "special_points", "curve.components[]");
      if (!pts.is_array()) throw ParseError("curve.components[].special_points: expected an array");
      for (const auto& jp : pts) {
        const std::string what = "curve special point";
        check_keys(jp, {"id", "color", "kind", "label"}, what);
        SpecialPoint p;
        p.id = identifier(require(jp, "id", what), what);
        p.color = color_of(require(jp, "color", what), what);
        const Json& kind = require(jp, "kind", what);
        if (kind == "puncture") p.kind = PointKind::Puncture;
        else if (kind == "node") p.kind = PointKind::Node;
        else throw ParseError(what + ": kind must be \"puncture\" or \"node\"");
        if (auto it = jp.find("label"); it != jp.end()) p.label = identifier(*it, what);
        comp.special_points.push_back(std::move(p));
      }
      c.components.push_back(std::move(comp));
    }
    if (auto it = j.find("node_pairing"); it != j.end()) {
      if (!it->is_array()) throw ParseError("curve.node_pairing: expected an array");
      for (const auto& p : *it) c.node_pairing.push_back(id_pair(p, "curve.node_pairing"));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("curve: ") + e.what());
  }
}

Json to_json(const ModuliSignature& s) {
  Json factors = Json::array();
  for (const auto& f : s.factors) factors.push_back({{"genus", f.genus}, {"ns", f.ns}, {"r", f.r}});
  return {{"mode", to_string(s.mode)}, {"factors", factors}};
}

ModuliSignature signature_from_json(const Json& j) {
  try {
    check_keys(j, {"mode", "factors"}, "signature");
    ModuliSignature s;
    const Json& mode = require(j, "mode", "signature");
    if (mode == "super") s.mode = Mode::Super;
    else if (mode == "classical") s.mode = Mode::Classical;
    else throw ParseError("signature.mode must be \"super\" or \"classical\"");
    const Json& factors = require(j, "factors", "signature");
    if (!factors.is_array()) throw ParseError("signature.factors: expected an array");
    for (const auto& jf : factors) {
      check_keys(jf, {"genus", "ns", "r"}, "signature factor");
      ModuliFactor f;
      f.genus = integer(require(jf, "genus", "signature factor"), "signature factor genus");
      f.ns = id_set(require(jf, "ns", "signature factor"), "signature factor ns");
      if (auto it = jf.find("r"); it != jf.end()) f.r = id_set(*it, "signature factor r");
      s.factors.push_back(std::move(f));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("signature: ") + e.what());
  }
}

namespace {

Json gluings_json(const std::vector<std::set<LabelPair>>& per_target) {
  Json out = Json::array();
  for (const auto& pairs : per_target) {
    Json list = Json::array();
    for (const auto& p : pairs) list.push_back(pair_json(p));
    out.push_back(list);
  }
  return out;
}

std::vector<std::set<LabelPair>> gluings_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array per target factor");
  std::vector<std::set<LabelPair>> out;
  for (const auto& list : j) {
    if (!list.is_array()) throw ParseError(what + ": expected an array of pairs");
    std::set<LabelPair> pairs;
    for (const auto& p : list) {
      auto [a, b] = id_pair(p, what);
      pairs.insert(sorted_pair(a, b));
    }
    out.push_back(std::move(pairs));
  }
  return out;
}

}  // namespace

Json to_json(const GluingRecipe& r) {
  Json j;
  j["source"] = to_json(r.source);
  j["target"] = to_json(r.target);
  j["assignment"] = r.assignment;
  j["ns_gluings"] = gluings_json(r.ns_gluings);
  j["r_gluings"] = gluings_json(r.r_gluings);
  j["relabeling"] = r.relabeling;
  j["ramond_fiber_rank"] = r.ramond_fiber_rank;
  return j;
}

GluingRecipe recipe_from_json(const Json& j) {
  try {
    const std::string what = "recipe";
    check_keys(j, {"source", "target", "assignment", "ns_gluings", "r_gluings", "relabeling", "ramond_fiber_rank"},
               what);
    GluingRecipe r;
    r.source = signature_from_json(require(j, "source", what));
    r.target = signature_from_json(require(j, "target", what));
    const Json& a = require(j, "assignment", what);
    if (!a.is_array()) throw ParseError("recipe.assignment: expected an array");
    for (const auto& x : a) {
      const int t = integer(x, "recipe.assignment");
      if (t < 0) throw ParseError("recipe.assignment: negative index");
      r.assignment.push_back(static_cast<std::size_t>(t));
    }
    r.ns_gluings = gluings_from_json(require(j, "ns_gluings", what), "recipe.ns_gluings");
    r.r_gluings = gluings_from_json(require(j, "r_gluings", what), "recipe.r_gluings");
    r.relabeling = id_map(require(j, "relabeling", what), "recipe.relabeling");
    r.ramond_fiber_rank = integer(require(j, "ramond_fiber_rank", what), "recipe.ramond_fiber_rank");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("recipe: ") + e.what());
  }
}

Json to_json(const StratumDimension& d) {
  Json j;
  j["even"] = d.even;
  j["odd"] = d.odd;
  j["codim"] = Json::array({d.codim_even, d.codim_odd});
  return j;
}

Json to_json(const ValidationReport& r) {
  Json j;
  j["valid"] = r.ok();
  j["violations"] = r.violations;
  return j;
}

Json to_json(const Elementary& e) {
  Json j;
  j["kind"] = to_string(e.kind);
  switch (e.kind) {
    case ElementaryKind::Grafting: {
      Json pairs = Json::array();
      for (const auto& p : e.pairs) pairs.push_back(pair_json(p));
      j["pairs"] = pairs;
      break;
    }
    case ElementaryKind::EdgeContraction:
    case ElementaryKind::LoopContraction:
    case ElementaryKind::VirtualContraction:
      if (!e.pairs.empty()) j["pair"] = pair_json(*e.pairs.begin());
      break;
    case ElementaryKind::Isomorphism:
      j["flag_bijection"] = e.flag_bijection;
      j["vertex_bijection"] = e.vertex_bijection;
      break;
    case ElementaryKind::Composite:
      break;
  }
  return j;
}

Json to_json(const std::vector<Elementary>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) out.push_back(to_json(s));
  return out;
}

Json to_json(const Stratum& s) {
  Json j = to_json(s.graph);
  j["certificate"] = s.certificate;
  return j;
}

Json to_json(const ContractionPoset& p) {
  Json out = Json::array();
  for (std::size_t i = 0; i < p.rank.size(); ++i) {
    Json up = Json::array();
    for (const auto& [lo, hi] : p.covers) {
      if (lo == i) up.push_back(hi);
    }
    out.push_back({{"stratum", i}, {"rank", p.rank[i]}, {"contracts_to", up}});
  }
  return out;
}

}  // namespace susy

#include "susy/operad.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "union_find.hpp"

namespace susy {

const char* to_string(Mode m) { return m == Mode::Super ? "super" : "classical"; }

namespace {

struct LabelSite {
  std::size_t factor;
  Color color;
};

std::map<Label, LabelSite> label_sites(const ModuliSignature& s) {
  std::map<Label, LabelSite> out;
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    for (const auto& l : s.factors[i].ns) out.emplace(l, LabelSite{i, Color::NS});
    for (const auto& l : s.factors[i].r) out.emplace(l, LabelSite{i, Color::R});
  }
  return out;
}

void require_valid(const ModuliSignature& s, const char* who) {
  auto report = validate_signature(s);
  if (!report.ok()) throw Error(std::string(who) + ": invalid signature: " + report.violations.front());
}

std::string join(const std::set<Label>& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : ",") + l;
  return out;
}

std::string join(const std::set<LabelPair>& pairs) {
  std::string out;
  for (const auto& [a, b] : pairs) out += (out.empty() ? "" : ",") + ("(" + a + "," + b + ")");
  return out;
}

}  // namespace

ValidationReport validate_signature(const ModuliSignature& s) {
  ValidationReport report;
  std::set<Label> seen;
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    const auto& f = s.factors[i];
    const std::string where = "factor " + std::to_string(i);
    if (f.genus < 0) report.add(where + ": negative genus");
    const int n = static_cast<int>(f.ns.size() + f.r.size());
    if (2 * f.genus - 2 + n <= 0) report.add(where + ": unstable (2g-2+#I = " + std::to_string(2 * f.genus - 2 + n) + ")");
    if (s.mode == Mode::Super && f.r.size() % 2 != 0) report.add(where + ": odd number of Ramond labels");
    if (s.mode == Mode::Classical && !f.r.empty()) report.add(where + ": Ramond labels in a classical signature");
    for (const auto* set : {&f.ns, &f.r}) {
      for (const auto& l : *set) {
        if (!seen.insert(l).second) report.add("label '" + l + "' used twice");
      }
    }
  }
  return report;
}

ModuliSignature sorted_signature(ModuliSignature s) {
  std::sort(s.factors.begin(), s.factors.end());
  return s;
}

bool same_signature(const ModuliSignature& a, const ModuliSignature& b) {
  return sorted_signature(a) == sorted_signature(b);
}

ValidationReport validate_recipe(const GluingRecipe& r) {
  ValidationReport report;
  report.append(validate_signature(r.source), "source: ");
  report.append(validate_signature(r.target), "target: ");
  if (!report.ok()) return report;
  if (r.source.mode != r.target.mode) report.add("source and target modes differ");
  const std::size_t ns = r.source.factors.size();
  const std::size_t nt = r.target.factors.size();
  if (r.assignment.size() != ns) {
    report.add("assignment does not cover every source factor");
    return report;
  }
  if (r.ns_gluings.size() != nt || r.r_gluings.size() != nt) {
    report.add("gluings are not given per target factor");
    return report;
  }
  std::vector<std::vector<std::size_t>> assigned(nt);
  for (std::size_t s = 0; s < ns; ++s) {
    if (r.assignment[s] >= nt) {
      report.add("source factor " + std::to_string(s) + " assigned to a missing target factor");
      return report;
    }
    assigned[r.assignment[s]].push_back(s);
  }

  const auto src = label_sites(r.source);
  const auto tgt = label_sites(r.target);
  std::set<Label> glued;
  int ramond_pairs = 0;
  for (std::size_t t = 0; t < nt; ++t) {
    const std::string where = "target factor " + std::to_string(t);
    if (assigned[t].empty()) report.add(where + ": no source factor assigned (assignment not surjective)");
    UnionFind<std::size_t> uf(assigned[t].begin(), assigned[t].end());
    int pairs = 0;
    for (Color c : {Color::NS, Color::R}) {
      for (const auto& [a, b] : (c == Color::NS ? r.ns_gluings : r.r_gluings)[t]) {
        ++pairs;
        if (c == Color::R) ++ramond_pairs;
        const std::string pair = where + ": " + to_string(c) + " pair (" + a + "," + b + ")";
        if (!(a < b)) report.add(pair + " is not a sorted pair of distinct labels");
        bool known = true;
        for (const auto& l : {a, b}) {
          auto it = src.find(l);
          if (it == src.end()) {
            report.add(pair + ": unknown label '" + l + "'");
            known = false;
            continue;
          }
          if (it->second.color != c) report.add(pair + ": label '" + l + "' has the other color");
          if (r.assignment[it->second.factor] != t) {
            report.add(pair + ": label '" + l + "' lies on a factor assigned elsewhere");
            known = false;
          }
          if (!glued.insert(l).second) report.add("label '" + l + "' glued twice");
        }
        if (known) uf.unite(src.at(a).factor, src.at(b).factor);
      }
    }
    if (!assigned[t].empty() && uf.classes().size() > 1) {
      report.add(where + ": assigned source factors are not connected by gluings");
    }
    int genus = 1;
    for (auto s : assigned[t]) genus += r.source.factors[s].genus - 1;
    genus += pairs;
    if (genus != r.target.factors[t].genus) {
      report.add(where + ": genus " + std::to_string(r.target.factors[t].genus) + " but the gluings give " +
                 std::to_string(genus));
    }
  }

  std::set<Label> hit;
  for (const auto& [l, site] : src) {
    if (glued.count(l)) {
      if (r.relabeling.count(l)) report.add("glued label '" + l + "' is relabeled");
      continue;
    }
    auto it = r.relabeling.find(l);
    if (it == r.relabeling.end()) {
      report.add("surviving label '" + l + "' is not relabeled");
      continue;
    }
    auto t = tgt.find(it->second);
    if (t == tgt.end()) {
      report.add("label '" + l + "' relabeled to unknown target label '" + it->second + "'");
      continue;
    }
    if (!hit.insert(it->second).second) report.add("relabeling not injective at '" + it->second + "'");
    if (t->second.color != site.color) report.add("relabeling of '" + l + "' changes color");
    if (t->second.factor != r.assignment[site.factor]) report.add("relabeling of '" + l + "' changes factor");
  }
  for (const auto& [l, site] : r.relabeling) {
    if (!src.count(l)) report.add("relabeling of unknown label '" + l + "'");
  }
  for (const auto& [l, site] : tgt) {
    if (!hit.count(l)) report.add("target label '" + l + "' is not hit by the relabeling");
  }
  const int expected_rank = r.source.mode == Mode::Super ? ramond_pairs : 0;
  if (r.ramond_fiber_rank != expected_rank) {
    report.add("ramond_fiber_rank is " + std::to_string(r.ramond_fiber_rank) + ", expected " +
               std::to_string(expected_rank));
  }
  return report;
}

GluingRecipe canonicalize(GluingRecipe r) {
  const std::size_t ns = r.source.factors.size();
  const std::size_t nt = r.target.factors.size();
  if (r.assignment.size() != ns || r.ns_gluings.size() != nt || r.r_gluings.size() != nt) {
    throw Error("canonicalize: recipe fields have inconsistent sizes");
  }
  std::vector<std::vector<ModuliFactor>> sources(nt);
  for (std::size_t s = 0; s < ns; ++s) {
    if (r.assignment[s] >= nt) throw Error("canonicalize: assignment out of range");
    sources[r.assignment[s]].push_back(r.source.factors[s]);
  }
  for (auto& v : sources) std::sort(v.begin(), v.end());

  std::vector<std::size_t> t_order(nt);
  std::iota(t_order.begin(), t_order.end(), 0);
  std::stable_sort(t_order.begin(), t_order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(r.target.factors[a], sources[a], r.ns_gluings[a], r.r_gluings[a]) <
           std::tie(r.target.factors[b], sources[b], r.ns_gluings[b], r.r_gluings[b]);
  });
  std::vector<std::size_t> t_pos(nt);
  for (std::size_t i = 0; i < nt; ++i) t_pos[t_order[i]] = i;

  std::vector<std::size_t> s_order(ns);
  std::iota(s_order.begin(), s_order.end(), 0);
  std::stable_sort(s_order.begin(), s_order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(r.source.factors[a], t_pos[r.assignment[a]]) <
           std::tie(r.source.factors[b], t_pos[r.assignment[b]]);
  });

  GluingRecipe out;
  out.source.mode = r.source.mode;
  out.target.mode = r.target.mode;
  for (auto t : t_order) {
    out.target.factors.push_back(r.target.factors[t]);
    out.ns_gluings.push_back(r.ns_gluings[t]);
    out.r_gluings.push_back(r.r_gluings[t]);
  }
  for (auto s : s_order) {
    out.source.factors.push_back(r.source.factors[s]);
    out.assignment.push_back(t_pos[r.assignment[s]]);
  }
  out.relabeling = std::move(r.relabeling);
  out.ramond_fiber_rank = r.ramond_fiber_rank;
  return out;
}

GluingRecipe identity_recipe(const ModuliSignature& s) {
  require_valid(s, "identity_recipe");
  GluingRecipe r{s, s, {}, {}, {}, {}, 0};
  for (std::size_t i = 0; i < s.factors.size(); ++i) r.assignment.push_back(i);
  r.ns_gluings.resize(s.factors.size());
  r.r_gluings.resize(s.factors.size());
  for (const auto& [l, site] : label_sites(s)) r.relabeling.emplace(l, l);
  return canonicalize(std::move(r));
}

GluingRecipe recipe_compose(const GluingRecipe& first, const GluingRecipe& second) {
  if (first.target.mode != second.source.mode) throw Error("recipe_compose: modes differ");
  const auto& mid_a = first.target.factors;
  const auto& mid_b = second.source.factors;
  if (mid_a.size() != mid_b.size()) throw Error("recipe_compose: target of the first differs from source of the second");
  std::vector<std::size_t> match(mid_a.size());
  std::vector<bool> used(mid_b.size(), false);
  for (std::size_t i = 0; i < mid_a.size(); ++i) {
    std::size_t j = 0;
    while (j < mid_b.size() && (used[j] || !(mid_b[j] == mid_a[i]))) ++j;
    if (j == mid_b.size()) throw Error("recipe_compose: target of the first differs from source of the second");
    used[j] = true;
    match[i] = j;
  }

  GluingRecipe out;
  out.source = first.source;
  out.target = second.target;
  for (auto b : first.assignment) out.assignment.push_back(second.assignment[match[b]]);
  out.ns_gluings.resize(second.target.factors.size());
  out.r_gluings.resize(second.target.factors.size());
  for (std::size_t b = 0; b < mid_a.size(); ++b) {
    const std::size_t c = second.assignment[match[b]];
    out.ns_gluings[c].insert(first.ns_gluings[b].begin(), first.ns_gluings[b].end());
    out.r_gluings[c].insert(first.r_gluings[b].begin(), first.r_gluings[b].end());
  }
  std::map<Label, Label> back;
  for (const auto& [a, b] : first.relabeling) back.emplace(b, a);
  const auto pull = [&](const LabelPair& p) {
    auto x = back.find(p.first);
    auto y = back.find(p.second);
    if (x == back.end() || y == back.end()) throw Error("recipe_compose: gluing of a label the first recipe does not produce");
    return sorted_pair(x->second, y->second);
  };
  for (std::size_t c = 0; c < second.target.factors.size(); ++c) {
    for (const auto& p : second.ns_gluings[c]) out.ns_gluings[c].insert(pull(p));
    for (const auto& p : second.r_gluings[c]) out.r_gluings[c].insert(pull(p));
  }
  for (const auto& [a, b] : first.relabeling) {
    auto it = second.relabeling.find(b);
    if (it != second.relabeling.end()) out.relabeling.emplace(a, it->second);
  }
  out.ramond_fiber_rank = first.ramond_fiber_rank + second.ramond_fiber_rank;
  return canonicalize(std::move(out));
}

GluingRecipe recipe_product(const GluingRecipe& a, const GluingRecipe& b) {
  if (a.source.mode != b.source.mode) throw Error("recipe_product: modes differ");
  GluingRecipe out = a;
  const std::size_t shift = a.target.factors.size();
  out.source.factors.insert(out.source.factors.end(), b.source.factors.begin(), b.source.factors.end());
  out.target.factors.insert(out.target.factors.end(), b.target.factors.begin(), b.target.factors.end());
  for (auto t : b.assignment) out.assignment.push_back(t + shift);
  out.ns_gluings.insert(out.ns_gluings.end(), b.ns_gluings.begin(), b.ns_gluings.end());
  out.r_gluings.insert(out.r_gluings.end(), b.r_gluings.begin(), b.r_gluings.end());
  for (const auto& kv : b.relabeling) {
    if (!out.relabeling.emplace(kv).second) throw Error("recipe_product: label '" + kv.first + "' on both sides");
  }
  out.ramond_fiber_rank += b.ramond_fiber_rank;
  require_valid(out.source, "recipe_product");
  require_valid(out.target, "recipe_product");
  return canonicalize(std::move(out));
}

GluingRecipe generator_relabel(const ModuliSignature& s, const std::map<Label, Label>& ns,
                               const std::map<Label, Label>& r) {
  require_valid(s, "relabel");
  const auto sites = label_sites(s);
  for (Color c : {Color::NS, Color::R}) {
    for (const auto& [from, to] : (c == Color::NS ? ns : r)) {
      auto it = sites.find(from);
      if (it == sites.end()) throw Error("relabel: unknown label '" + from + "'");
      if (it->second.color != c) throw Error("relabel: label '" + from + "' is not " + to_string(c));
    }
  }
  const auto apply = [](const std::set<Label>& labels, const std::map<Label, Label>& m,
                        std::map<Label, Label>& relabeling) {
    std::set<Label> out;
    for (const auto& l : labels) {
      auto it = m.find(l);
      const Label& to = it == m.end() ? l : it->second;
      out.insert(to);
      relabeling.emplace(l, to);
    }
    return out;
  };
  GluingRecipe rec;
  rec.source = s;
  rec.target.mode = s.mode;
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    const auto& f = s.factors[i];
    rec.target.factors.push_back({f.genus, apply(f.ns, ns, rec.relabeling), apply(f.r, r, rec.relabeling)});
    rec.assignment.push_back(i);
  }
  std::set<Label> images;
  for (const auto& [from, to] : rec.relabeling) {
    if (!images.insert(to).second) throw Error("relabel: maps are not injective at '" + to + "'");
  }
  auto report = validate_signature(rec.target);
  if (!report.ok()) throw Error("relabel: invalid target: " + report.violations.front());
  rec.ns_gluings.resize(s.factors.size());
  rec.r_gluings.resize(s.factors.size());
  return canonicalize(std::move(rec));
}

namespace {

GluingRecipe glue(const ModuliSignature& s, const Label& a, const Label& b, Color c, bool loop) {
  const char* who = c == Color::NS ? (loop ? "glue_ns_loop" : "glue_ns") : (loop ? "glue_r_loop" : "glue_r");
  require_valid(s, who);
  if (a == b) throw Error(std::string(who) + ": cannot glue label '" + a + "' to itself");
  const auto sites = label_sites(s);
  for (const auto& l : {a, b}) {
    auto it = sites.find(l);
    if (it == sites.end()) throw Error(std::string(who) + ": unknown label '" + l + "'");
    if (it->second.color != c) throw Error(std::string(who) + ": label '" + l + "' is not " + to_string(c));
  }
  const std::size_t fa = sites.at(a).factor;
  const std::size_t fb = sites.at(b).factor;
  if (loop && fa != fb) throw Error(std::string(who) + ": labels lie on different factors");
  if (!loop && fa == fb) throw Error(std::string(who) + ": labels lie on the same factor");

  const std::size_t keep = std::min(fa, fb);
  const std::size_t drop = std::max(fa, fb);
  GluingRecipe rec;
  rec.source = s;
  rec.target.mode = s.mode;
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    if (i == drop && !loop) continue;
    rec.target.factors.push_back(s.factors[i]);
  }
  ModuliFactor& merged = rec.target.factors[keep];
  if (loop) {
    merged.genus += 1;
  } else {
    const auto& other = s.factors[drop];
    merged.genus += other.genus;
    merged.ns.insert(other.ns.begin(), other.ns.end());
    merged.r.insert(other.r.begin(), other.r.end());
  }
  auto& labels = c == Color::NS ? merged.ns : merged.r;
  labels.erase(a);
  labels.erase(b);

  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    rec.assignment.push_back(!loop && i > drop ? i - 1 : (i == drop ? keep : i));
  }
  rec.ns_gluings.resize(rec.target.factors.size());
  rec.r_gluings.resize(rec.target.factors.size());
  (c == Color::NS ? rec.ns_gluings : rec.r_gluings)[keep].insert(sorted_pair(a, b));
  for (const auto& [l, site] : sites) {
    if (l != a && l != b) rec.relabeling.emplace(l, l);
  }
  rec.ramond_fiber_rank = c == Color::R ? 1 : 0;
  return canonicalize(std::move(rec));
}

}  // namespace

GluingRecipe generator_glue_ns(const ModuliSignature& s, const Label& i, const Label& i2) {
  return glue(s, i, i2, Color::NS, false);
}
GluingRecipe generator_glue_ns_loop(const ModuliSignature& s, const Label& i, const Label& i2) {
  return glue(s, i, i2, Color::NS, true);
}
GluingRecipe generator_glue_r(const ModuliSignature& s, const Label& j, const Label& j2) {
  return glue(s, j, j2, Color::R, false);
}
GluingRecipe generator_glue_r_loop(const ModuliSignature& s, const Label& j, const Label& j2) {
  return glue(s, j, j2, Color::R, true);
}

ModuliSignature signature_of(const SusyGraph& g) {
  ModuliSignature s;
  s.mode = g.modular ? Mode::Classical : Mode::Super;
  const auto by_vertex = flags_by_vertex(g.graph);
  for (const auto& [v, flags] : by_vertex) {
    ModuliFactor f;
    f.genus = g.labeling.genus.at(v);
    for (const auto& fl : flags) (g.labeling.color.at(fl) == Color::NS ? f.ns : f.r).insert(fl);
    s.factors.push_back(std::move(f));
  }
  return s;
}

GluingRecipe evaluate_operad(const SusyMorphism& h) {
  auto report = validate_susy_morphism(h);
  if (!report.ok()) throw Error("evaluate: invalid morphism: " + report.violations.front());
  if (h.source.modular != h.target.modular) throw Error("evaluate: source and target are of different kinds");
  if (!is_stable(h.source) || !is_stable(h.target)) throw Error("evaluate: graphs must be stable");

  GluingRecipe rec;
  rec.source = signature_of(h.source);
  rec.target = signature_of(h.target);
  std::map<VertexId, std::size_t> t_index;
  for (const auto& w : h.target.graph.vertices) t_index.emplace(w, t_index.size());
  for (const auto& v : h.source.graph.vertices) rec.assignment.push_back(t_index.at(h.vertex_map.at(v)));
  rec.ns_gluings.resize(t_index.size());
  rec.r_gluings.resize(t_index.size());
  for (const auto& [a, b] : pairs_of(h.contracted)) {
    const std::size_t t = t_index.at(h.vertex_map.at(h.source.graph.boundary.at(a)));
    if (h.source.labeling.color.at(a) == Color::R) {
      rec.r_gluings[t].insert({a, b});
      ++rec.ramond_fiber_rank;
    } else {
      rec.ns_gluings[t].insert({a, b});
    }
  }
  for (const auto& [f, s] : h.flag_map) rec.relabeling.emplace(s, f);
  return canonicalize(std::move(rec));
}

GluingRecipe evaluate_elementary(const Elementary& step) {
  const SusyMorphism& h = step.morphism;
  const ModuliSignature sig = signature_of(h.source);
  switch (step.kind) {
    case ElementaryKind::Grafting:
      return identity_recipe(sig);
    case ElementaryKind::EdgeContraction:
    case ElementaryKind::LoopContraction:
    case ElementaryKind::VirtualContraction: {
      if (step.pairs.size() != 1) throw Error("evaluate: contraction step without a single pair");
      const auto& [a, b] = *step.pairs.begin();
      const bool loop = h.source.graph.boundary.at(a) == h.source.graph.boundary.at(b);
      const bool ramond = h.source.labeling.color.at(a) == Color::R;
      return glue(sig, a, b, ramond ? Color::R : Color::NS, loop);
    }
    case ElementaryKind::Isomorphism: {
      std::map<Label, Label> ns, r;
      for (const auto& [f, s] : h.flag_map) (h.source.labeling.color.at(s) == Color::NS ? ns : r).emplace(s, f);
      return generator_relabel(sig, ns, r);
    }
    case ElementaryKind::Composite:
      break;
  }
  return evaluate_operad(h);
}

GluingRecipe evaluate_steps(const SusyGraph& source, const std::vector<Elementary>& steps) {
  GluingRecipe acc = identity_recipe(signature_of(source));
  for (const auto& step : steps) acc = recipe_compose(acc, evaluate_elementary(step));
  return acc;
}

ModuliSignature project(const ModuliSignature& s) {
  ModuliSignature out;
  out.mode = Mode::Classical;
  for (const auto& f : s.factors) {
    ModuliFactor m{f.genus, f.ns, {}};
    m.ns.insert(f.r.begin(), f.r.end());
    out.factors.push_back(std::move(m));
  }
  return out;
}

GluingRecipe project(const GluingRecipe& r) {
  GluingRecipe out;
  out.source = project(r.source);
  out.target = project(r.target);
  out.assignment = r.assignment;
  out.ns_gluings = r.ns_gluings;
  out.r_gluings.assign(r.r_gluings.size(), {});
  for (std::size_t t = 0; t < r.r_gluings.size() && t < out.ns_gluings.size(); ++t) {
    out.ns_gluings[t].insert(r.r_gluings[t].begin(), r.r_gluings[t].end());
  }
  out.relabeling = r.relabeling;
  out.ramond_fiber_rank = 0;
  return canonicalize(std::move(out));
}

namespace {

struct ColorCounts {
  int vertices = 0, genus_sum = 0;
  int tails_ns = 0, tails_r = 0, edges_ns = 0, edges_r = 0;
};

ColorCounts counts(const SusyGraph& g) {
  ColorCounts c;
  c.vertices = static_cast<int>(g.graph.vertices.size());
  for (const auto& [v, k] : g.labeling.genus) c.genus_sum += k;
  for (const auto& t : tails(g.graph)) (g.labeling.color.at(t) == Color::NS ? c.tails_ns : c.tails_r)++;
  for (const auto& [a, b] : edges(g.graph)) (g.labeling.color.at(a) == Color::NS ? c.edges_ns : c.edges_r)++;
  return c;
}

int halve(int twice, const char* who) {
  if (twice % 2 != 0) throw Error(std::string(who) + ": odd dimension is not an integer");
  return twice / 2;
}

}  // namespace

StratumDimension dimension_closed_form(const SusyGraph& g) {
  const ColorCounts c = counts(g);
  const int gen = genus(g);
  const int t = c.tails_ns + c.tails_r;
  const int e = c.edges_ns + c.edges_r;
  StratumDimension d;
  d.even = 3 * gen - 3 + t - e;
  d.odd = halve(2 * (2 * gen - 2 + c.tails_ns) + c.tails_r, "dimension");
  d.codim_even = e;
  return d;
}

StratumDimension dimension_per_vertex(const SusyGraph& g) {
  const ColorCounts c = counts(g);
  int even = 0;
  int odd_twice = 0;
  for (const auto& v : g.graph.vertices) {
    const int gv = g.labeling.genus.at(v);
    const int fns = flags_of_color_at(g, v, Color::NS);
    const int fr = flags_of_color_at(g, v, Color::R);
    even += 3 * gv - 3 + fns + fr;
    odd_twice += 2 * (2 * gv - 2 + fns) + fr;
  }
  odd_twice += 2 * c.edges_r;
  StratumDimension d;
  d.even = even;
  d.odd = halve(odd_twice, "dimension");
  d.codim_even = c.edges_ns + c.edges_r;
  return d;
}

StratumDimension stratum_dimension(const SusyGraph& g) {
  auto report = validate_susy_graph(g);
  if (!report.ok()) throw Error("dims: invalid graph: " + report.violations.front());
  if (connected_components(g.graph).size() != 1) throw Error("dims: graph is not connected");
  if (!is_stable(g)) throw Error("dims: graph is not stable");
  if (tails_of_color(g, Color::R).size() % 2 != 0) throw Error("dims: odd number of Ramond tails");
  const StratumDimension closed = dimension_closed_form(g);
  const StratumDimension summed = dimension_per_vertex(g);
  if (!(closed == summed)) {
    throw Error("dims: closed form (" + std::to_string(closed.even) + "|" + std::to_string(closed.odd) +
                ") disagrees with per-vertex sums (" + std::to_string(summed.even) + "|" +
                std::to_string(summed.odd) + ")");
  }
  return closed;
}

std::string describe(const ModuliSignature& s) {
  std::string out = std::string(to_string(s.mode)) + "[";
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    const auto& f = s.factors[i];
    if (i) out += " x ";
    out += "(g=" + std::to_string(f.genus) + "; NS{" + join(f.ns) + "}; R{" + join(f.r) + "})";
  }
  return out + "]";
}

std::string describe(const GluingRecipe& r) {
  std::ostringstream os;
  os << describe(r.source) << " -> " << describe(r.target) << " assignment[";
  for (std::size_t i = 0; i < r.assignment.size(); ++i) os << (i ? "," : "") << r.assignment[i];
  os << "]";
  for (std::size_t t = 0; t < r.ns_gluings.size(); ++t) {
    os << " t" << t << ":NS{" << join(r.ns_gluings[t]) << "}";
    if (t < r.r_gluings.size()) os << "R{" << join(r.r_gluings[t]) << "}";
  }
  os << " relabel{";
  bool first = true;
  for (const auto& [a, b] : r.relabeling) {
    os << (first ? "" : ",") << a << "->" << b;
    first = false;
  }
  os << "} rank=" << r.ramond_fiber_rank;
  return os.str();
}

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return below(2) == 1; }
  Color color() { return coin() ? Color::R : Color::NS; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// Random signatures with prescribed labels on prescribed factors.
class InstanceBuilder {
 public:
  explicit InstanceBuilder(Rng& rng) : rng_(rng) {}

  std::size_t add_factor() {
    ModuliFactor f;
    f.genus = static_cast<int>(rng_.below(3));
    sig_.factors.push_back(std::move(f));
    return sig_.factors.size() - 1;
  }

  Label add_label(std::size_t factor, Color c) {
    Label l = fresh();
    (c == Color::NS ? sig_.factors[factor].ns : sig_.factors[factor].r).insert(l);
    return l;
  }

  Label fresh() { return "x" + std::to_string(next_++); }

  // Pads with random extra labels and bystander factors, then fixes parity
  // and stability.
  ModuliSignature finish() {
    const std::size_t bystanders = rng_.below(2);
    for (std::size_t i = 0; i < bystanders; ++i) add_factor();
    for (std::size_t i = 0; i < sig_.factors.size(); ++i) {
      for (std::size_t k = rng_.below(3); k > 0; --k) add_label(i, Color::NS);
      if (rng_.coin()) {
        add_label(i, Color::R);
        add_label(i, Color::R);
      }
      if (sig_.factors[i].r.size() % 2 != 0) add_label(i, Color::R);
      while (2 * sig_.factors[i].genus - 2 + static_cast<int>(sig_.factors[i].ns.size() + sig_.factors[i].r.size()) <= 0) {
        add_label(i, Color::NS);
      }
    }
    rng_.shuffle(sig_.factors);
    return sig_;
  }

 private:
  Rng& rng_;
  ModuliSignature sig_;
  int next_ = 0;
};

GluingRecipe glue_any(const ModuliSignature& s, const LabelPair& p, Color c, bool loop) {
  return glue(s, p.first, p.second, c, loop);
}

// A random bijection of the labels of s: permutes each color class and
// renames some labels to fresh ones.
std::pair<std::map<Label, Label>, std::map<Label, Label>> random_bijection(const ModuliSignature& s, Rng& rng,
                                                                           const std::string& prefix) {
  std::pair<std::map<Label, Label>, std::map<Label, Label>> out;
  for (Color c : {Color::NS, Color::R}) {
    std::vector<Label> labels;
    for (const auto& f : s.factors) {
      const auto& set = c == Color::NS ? f.ns : f.r;
      labels.insert(labels.end(), set.begin(), set.end());
    }
    std::vector<Label> images = labels;
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (rng.coin()) images[i] = prefix + std::to_string(i) + (c == Color::NS ? "n" : "r");
    }
    rng.shuffle(images);
    auto& m = c == Color::NS ? out.first : out.second;
    for (std::size_t i = 0; i < labels.size(); ++i) m.emplace(labels[i], images[i]);
  }
  return out;
}

Label image(const std::pair<std::map<Label, Label>, std::map<Label, Label>>& bij, const Label& l) {
  auto it = bij.first.find(l);
  return it != bij.first.end() ? it->second : bij.second.at(l);
}

std::map<Label, Label> restricted(const std::map<Label, Label>& m, const ModuliSignature& s) {
  std::map<Label, Label> out;
  const auto sites = label_sites(s);
  for (const auto& kv : m) {
    if (sites.count(kv.first)) out.insert(kv);
  }
  return out;
}

const char* kind(Color c, bool loop) {
  return c == Color::NS ? (loop ? "NS loop" : "NS edge") : (loop ? "R loop" : "R edge");
}

struct Check {
  int condition;
  std::string instance;
  GluingRecipe lhs;
  GluingRecipe rhs;
};

Check condition_relabelings(Rng& rng) {
  InstanceBuilder b(rng);
  for (std::size_t k = rng.below(3) + 1; k > 0; --k) b.add_factor();
  const ModuliSignature s = b.finish();
  const auto first = random_bijection(s, rng, "s");
  const GluingRecipe r1 = generator_relabel(s, first.first, first.second);
  auto second = random_bijection(r1.target, rng, "t");
  if (rng.below(4) == 0) {
    for (auto* m : {&second.first, &second.second}) {
      for (auto& [from, to] : *m) to = from;
    }
  }
  const GluingRecipe r2 = generator_relabel(r1.target, second.first, second.second);
  std::map<Label, Label> ns, r;
  for (const auto& [a, x] : first.first) ns.emplace(a, second.first.at(x));
  for (const auto& [a, x] : first.second) r.emplace(a, second.second.at(x));
  return {1, "relabel twice vs relabel by the composite on " + describe(s), recipe_compose(r1, r2),
          generator_relabel(s, ns, r)};
}

// Conditions 2 and 3: a relabeling followed by a gluing of the image labels
// equals the gluing followed by the restricted relabeling.
Check condition_iso_gluing(Rng& rng, bool loop) {
  InstanceBuilder b(rng);
  const Color c = rng.color();
  const std::size_t f1 = b.add_factor();
  const std::size_t f2 = loop ? f1 : b.add_factor();
  const LabelPair p{b.add_label(f1, c), b.add_label(f2, c)};
  const ModuliSignature s = b.finish();
  const auto bij = random_bijection(s, rng, "s");
  const GluingRecipe rel = generator_relabel(s, bij.first, bij.second);
  const GluingRecipe lhs = recipe_compose(rel, glue_any(rel.target, sorted_pair(image(bij, p.first), image(bij, p.second)), c, loop));
  const GluingRecipe g = glue_any(s, sorted_pair(p.first, p.second), c, loop);
  const GluingRecipe rhs =
      recipe_compose(g, generator_relabel(g.target, restricted(bij.first, g.target), restricted(bij.second, g.target)));
  return {loop ? 2 : 3,
          std::string(kind(c, loop)) + " gluing (" + p.first + "," + p.second + ") vs relabeling on " + describe(s),
          lhs, rhs};
}

// Conditions 4 to 6: two gluings in either order.
Check two_gluings(int condition, const ModuliSignature& s, LabelPair p, Color cp, bool p_loop_first,
                  bool p_loop_second, LabelPair q, Color cq, bool q_loop_first, bool q_loop_second) {
  p = sorted_pair(p.first, p.second);
  q = sorted_pair(q.first, q.second);
  const GluingRecipe a = glue_any(s, p, cp, p_loop_first);
  const GluingRecipe lhs = recipe_compose(a, glue_any(a.target, q, cq, q_loop_second));
  const GluingRecipe b = glue_any(s, q, cq, q_loop_first);
  const GluingRecipe rhs = recipe_compose(b, glue_any(b.target, p, cp, p_loop_second));
  return {condition,
          std::string(kind(cp, p_loop_first)) + " (" + p.first + "," + p.second + ") and " + kind(cq, q_loop_first) +
              " (" + q.first + "," + q.second + ") on " + describe(s),
          lhs, rhs};
}

Check condition_loops(Rng& rng) {
  InstanceBuilder b(rng);
  const Color c1 = rng.color(), c2 = rng.color();
  const std::size_t f1 = b.add_factor();
  const std::size_t f2 = rng.coin() ? f1 : b.add_factor();
  const LabelPair p{b.add_label(f1, c1), b.add_label(f1, c1)};
  const LabelPair q{b.add_label(f2, c2), b.add_label(f2, c2)};
  return two_gluings(4, b.finish(), p, c1, true, true, q, c2, true, true);
}

Check condition_loop_edge(Rng& rng) {
  InstanceBuilder b(rng);
  const Color c1 = rng.color(), c2 = rng.color();
  const std::size_t fa = b.add_factor();
  const std::size_t fb = b.add_factor();
  const LabelPair edge{b.add_label(fa, c1), b.add_label(fb, c1)};
  if (rng.coin()) {
    // A loop on one of the two factors; it stays a loop after the edge gluing.
    const std::size_t f = rng.coin() ? fa : fb;
    const LabelPair loop{b.add_label(f, c2), b.add_label(f, c2)};
    return two_gluings(5, b.finish(), edge, c1, false, false, loop, c2, true, true);
  }
  // A second pair across the same two factors: whichever is glued second is a loop.
  const LabelPair second{b.add_label(fa, c2), b.add_label(fb, c2)};
  return two_gluings(5, b.finish(), edge, c1, false, true, second, c2, false, true);
}

Check condition_edges(Rng& rng) {
  InstanceBuilder b(rng);
  const Color c1 = rng.color(), c2 = rng.color();
  const std::size_t fa = b.add_factor();
  const std::size_t fb = b.add_factor();
  const LabelPair p{b.add_label(fa, c1), b.add_label(fb, c1)};
  if (rng.coin()) {
    const std::size_t fc = b.add_factor();
    const LabelPair q{b.add_label(rng.coin() ? fa : fb, c2), b.add_label(fc, c2)};
    return two_gluings(6, b.finish(), p, c1, false, false, q, c2, false, false);
  }
  const std::size_t fc = b.add_factor();
  const std::size_t fd = b.add_factor();
  const LabelPair q{b.add_label(fc, c2), b.add_label(fd, c2)};
  return two_gluings(6, b.finish(), p, c1, false, false, q, c2, false, false);
}

}  // namespace

AxiomReport check_operad_axioms(std::uint64_t seed, std::size_t cases) {
  AxiomReport report;
  if (cases == 0) return report;
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    for (int condition = 1; condition <= 6; ++condition) {
      ++report.checked[condition];
      try {
        Check c = condition == 1   ? condition_relabelings(rng)
                  : condition == 2 ? condition_iso_gluing(rng, true)
                  : condition == 3 ? condition_iso_gluing(rng, false)
                  : condition == 4 ? condition_loops(rng)
                  : condition == 5 ? condition_loop_edge(rng)
                                   : condition_edges(rng);
        if (!(c.lhs == c.rhs)) {
          report.failures.push_back("condition " + std::to_string(c.condition) + ": " + c.instance +
                                    "\n  lhs: " + describe(c.lhs) + "\n  rhs: " + describe(c.rhs));
        }
      } catch (const Error& e) {
        report.failures.push_back("condition " + std::to_string(condition) + ": case " + std::to_string(i) +
                                  " raised: " + e.what());
      }
    }
  }
  return report;
}

}  // namespace susy

#include "susy/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>
#include <tuple>

#include "susy/morphism_calculus.hpp"

namespace susy {

namespace {

int ci(Color c) { return c == Color::NS ? 0 : 1; }

std::string length_prefixed(const std::string& s) { return std::to_string(s.size()) + ":" + s; }

// The graph with vertices numbered 0..n-1 in identifier order.
struct Indexed {
  bool modular = false;
  std::vector<VertexId> ids;
  std::map<VertexId, int> index;
  std::vector<int> genus;
  // Tails per vertex and color, sorted by label.
  std::vector<std::array<std::vector<FlagId>, 2>> tails;
  std::vector<std::array<std::vector<FlagPair>, 2>> loops;
  // Key (i, j) with i < j; pairs oriented (flag at i, flag at j), sorted.
  std::map<std::pair<int, int>, std::array<std::vector<FlagPair>, 2>> between;
  std::vector<std::vector<std::array<int, 2>>> mult;
  std::map<FlagId, Label> label_of;
  std::map<FlagId, Color> color;

  explicit Indexed(const SusyGraph& g) : modular(g.modular) {
    for (const auto& v : g.graph.vertices) {
      index.emplace(v, static_cast<int>(ids.size()));
      ids.push_back(v);
      genus.push_back(g.labeling.genus.at(v));
    }
    const std::size_t n = ids.size();
    tails.resize(n);
    loops.resize(n);
    mult.assign(n, std::vector<std::array<int, 2>>(n, {0, 0}));
    color = g.labeling.color;
    for (const auto& [l, f] : g.labeling.ns_tail_labels) label_of.emplace(f, l);
    for (const auto& [l, f] : g.labeling.r_tail_labels) label_of.emplace(f, l);
    for (const auto& f : g.graph.flags) {
      const int v = index.at(g.graph.boundary.at(f));
      const FlagId& partner = g.graph.involution.at(f);
      const int c = ci(color.at(f));
      if (partner == f) {
        tails[v][c].push_back(f);
        continue;
      }
      if (!(f < partner)) continue;
      const int u = index.at(g.graph.boundary.at(partner));
      if (u == v) {
        loops[v][c].push_back({f, partner});
      } else if (v < u) {
        between[{v, u}][c].push_back({f, partner});
      } else {
        between[{u, v}][c].push_back({partner, f});
      }
      ++mult[v][u][c];
      if (u != v) ++mult[u][v][c];
    }
    for (auto& per : tails) {
      for (auto& list : per) {
        std::sort(list.begin(), list.end(), [&](const FlagId& a, const FlagId& b) {
          return std::tie(label_of[a], a) < std::tie(label_of[b], b);
        });
      }
    }
    for (auto& per : loops) {
      for (auto& list : per) std::sort(list.begin(), list.end());
    }
    for (auto& [key, per] : between) {
      for (auto& list : per) std::sort(list.begin(), list.end());
    }
  }

  int size() const { return static_cast<int>(ids.size()); }

  std::string vertex_key(int v, bool labels_fixed) const {
    std::string s = "g" + std::to_string(genus[v]);
    for (int c = 0; c < 2; ++c) {
      s += c == 0 ? "|n" : "|r";
      if (labels_fixed) {
        for (const auto& f : tails[v][c]) s += length_prefixed(label_of.at(f));
      } else {
        s += std::to_string(tails[v][c].size());
      }
    }
    s += "|l" + std::to_string(loops[v][0].size()) + "," + std::to_string(loops[v][1].size());
    return s;
  }

  // Edges between u and w of color c, oriented (flag at u, flag at w).
  std::vector<FlagPair> oriented(int u, int w, int c) const {
    if (u < w) {
      auto it = between.find({u, w});
      return it == between.end() ? std::vector<FlagPair>{} : it->second[c];
    }
    auto it = between.find({w, u});
    if (it == between.end()) return {};
    std::vector<FlagPair> out;
    for (const auto& [a, b] : it->second[c]) out.push_back({b, a});
    std::sort(out.begin(), out.end());
    return out;
  }
};

using Cells = std::vector<int>;

Cells refine(const Indexed& G, Cells cell) {
  const int n = G.size();
  int count = n == 0 ? 0 : *std::max_element(cell.begin(), cell.end()) + 1;
  while (true) {
    using Sig = std::pair<int, std::vector<std::array<int, 3>>>;
    std::vector<Sig> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = cell[v];
      for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        const auto& m = G.mult[v][u];
        if (m[0] || m[1]) sig[v].second.push_back({cell[u], m[0], m[1]});
      }
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<Sig> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      cell[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    const int next = static_cast<int>(distinct.size());
    if (next == count) return cell;
    count = next;
  }
}

std::string encode(const Indexed& G, const std::vector<int>& order, bool labels_fixed) {
  std::string s = G.modular ? "M" : "S";
  const int n = G.size();
  for (int i = 0; i < n; ++i) s += "[" + G.vertex_key(order[i], labels_fixed) + "]";
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& m = G.mult[order[i]][order[j]];
      if (m[0] || m[1]) {
        s += "e" + std::to_string(i) + "," + std::to_string(j) + ":" + std::to_string(m[0]) + "," +
             std::to_string(m[1]) + ";";
      }
    }
  }
  return s;
}

struct SearchResult {
  std::string best;
  std::vector<std::vector<int>> orders;  // every leaf order with the best encoding
};

void search(const Indexed& G, const Cells& start, bool labels_fixed, SearchResult& out) {
  const Cells cell = refine(G, start);
  const int n = G.size();
  std::vector<int> size(n, 0);
  for (int v = 0; v < n; ++v) ++size[cell[v]];
  int target = -1;
  for (int c = 0; c < n; ++c) {
    if (size[c] > 1) {
      target = c;
      break;
    }
  }
  if (target < 0) {
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[cell[v]] = v;
    std::string enc = encode(G, order, labels_fixed);
    if (out.orders.empty() || enc < out.best) {
      out.best = std::move(enc);
      out.orders.assign(1, std::move(order));
    } else if (enc == out.best) {
      out.orders.push_back(std::move(order));
    }
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (cell[v] != target) continue;
    Cells next = cell;
    for (int u = 0; u < n; ++u) {
      if (next[u] > target) ++next[u];
      else if (next[u] == target && u != v) next[u] = target + 1;
    }
    search(G, next, labels_fixed, out);
  }
}

SearchResult run_search(const Indexed& G, bool labels_fixed) {
  const int n = G.size();
  std::vector<std::string> keys(n);
  for (int v = 0; v < n; ++v) keys[v] = G.vertex_key(v, labels_fixed);
  std::vector<std::string> distinct = keys;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Cells cell(n);
  for (int v = 0; v < n; ++v) {
    cell[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), keys[v]) - distinct.begin());
  }
  SearchResult out;
  if (n == 0) {
    out.best = encode(G, {}, labels_fixed);
    out.orders.push_back({});
    return out;
  }
  search(G, cell, labels_fixed, out);
  return out;
}

CanonicalForm build_form(const Indexed& G, const SusyGraph& g, const std::vector<int>& order, std::string cert,
                         bool labels_fixed) {
  CanonicalForm cf;
  cf.certificate = std::move(cert);
  SusyGraph& rep = cf.representative;
  rep.modular = G.modular;
  const int n = G.size();
  const auto add_flag = [&](const FlagId& old, const FlagId& fresh, const VertexId& v, Color c) {
    rep.graph.flags.insert(fresh);
    rep.graph.boundary.emplace(fresh, v);
    rep.graph.involution.emplace(fresh, fresh);
    rep.labeling.color.emplace(fresh, c);
    cf.flag_witness.emplace(old, fresh);
  };
  const auto join = [&](const FlagId& a, const FlagId& b) {
    rep.graph.involution[a] = b;
    rep.graph.involution[b] = a;
  };
  std::vector<VertexId> name(n);
  for (int i = 0; i < n; ++i) {
    name[i] = "v" + std::to_string(i);
    const int v = order[i];
    rep.graph.vertices.insert(name[i]);
    rep.labeling.genus.emplace(name[i], G.genus[v]);
    cf.vertex_witness.emplace(G.ids[v], name[i]);
    for (int c = 0; c < 2; ++c) {
      const Color col = c == 0 ? Color::NS : Color::R;
      int k = 0;
      for (const auto& f : G.tails[v][c]) {
        FlagId fresh;
        if (labels_fixed) {
          fresh = G.label_of.at(f);
          if (!fresh.empty() && fresh.front() == '~') {
            throw Error("canonical_form: tail label '" + fresh + "' clashes with edge flag names");
          }
        } else {
          fresh = "t" + std::to_string(i) + "." + (c == 0 ? "n" : "r") + std::to_string(k++);
        }
        add_flag(f, fresh, name[i], col);
      }
    }
  }
  int next = 0;
  const auto edge_names = [&]() {
    FlagPair p{"~" + std::to_string(next), "~" + std::to_string(next + 1)};
    next += 2;
    return p;
  };
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < 2; ++c) {
      const Color col = c == 0 ? Color::NS : Color::R;
      for (const auto& [a, b] : G.loops[order[i]][c]) {
        auto [x, y] = edge_names();
        add_flag(a, x, name[i], col);
        add_flag(b, y, name[i], col);
        join(x, y);
      }
    }
    for (int j = i + 1; j < n; ++j) {
      for (int c = 0; c < 2; ++c) {
        const Color col = c == 0 ? Color::NS : Color::R;
        for (const auto& [a, b] : G.oriented(order[i], order[j], c)) {
          auto [x, y] = edge_names();
          add_flag(a, x, name[i], col);
          add_flag(b, y, name[j], col);
          join(x, y);
        }
      }
    }
  }
  for (const auto& [l, f] : g.labeling.ns_tail_labels) rep.labeling.ns_tail_labels.emplace(l, cf.flag_witness.at(f));
  for (const auto& [l, f] : g.labeling.r_tail_labels) rep.labeling.r_tail_labels.emplace(l, cf.flag_witness.at(f));
  return cf;
}

void require_valid(const SusyGraph& g, const char* who) {
  auto report = validate_susy_graph(g);
  if (!report.ok()) throw Error(std::string(who) + ": invalid graph: " + report.violations.front());
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > UINT64_MAX / b) throw Error("automorphisms: group order overflows 64 bits");
  return a * b;
}

std::uint64_t factorial(std::size_t k) {
  std::uint64_t out = 1;
  for (std::size_t i = 2; i <= k; ++i) out = checked_mul(out, i);
  return out;
}

// Flag-level lift of a vertex permutation gamma (index -> index).
Automorphism lift(const Indexed& G, const std::vector<int>& gamma, bool labels_fixed) {
  Automorphism a;
  const int n = G.size();
  std::map<Label, FlagId> by_label;
  for (const auto& [f, l] : G.label_of) by_label.emplace(l, f);
  const auto positional = [&](const std::vector<FlagPair>& from, const std::vector<FlagPair>& to) {
    for (std::size_t k = 0; k < from.size(); ++k) {
      a.flags.emplace(from[k].first, to.at(k).first);
      a.flags.emplace(from[k].second, to.at(k).second);
    }
  };
  for (int v = 0; v < n; ++v) {
    a.vertices.emplace(G.ids[v], G.ids[gamma[v]]);
    for (int c = 0; c < 2; ++c) {
      const auto& from = G.tails[v][c];
      const auto& to = G.tails[gamma[v]][c];
      for (std::size_t k = 0; k < from.size(); ++k) {
        a.flags.emplace(from[k], labels_fixed ? by_label.at(G.label_of.at(from[k])) : to.at(k));
      }
      positional(G.loops[v][c], G.loops[gamma[v]][c]);
    }
    for (int w = v + 1; w < n; ++w) {
      for (int c = 0; c < 2; ++c) positional(G.oriented(v, w, c), G.oriented(gamma[v], gamma[w], c));
    }
  }
  return a;
}

Automorphism identity_on(const SusyGraph& g) {
  Automorphism a;
  for (const auto& f : g.graph.flags) a.flags.emplace(f, f);
  for (const auto& v : g.graph.vertices) a.vertices.emplace(v, v);
  return a;
}

// Identity with the flags in `from` sent positionally to those in `to`.
Automorphism flag_permutation(const SusyGraph& g, const std::vector<FlagId>& from, const std::vector<FlagId>& to) {
  Automorphism a = identity_on(g);
  for (std::size_t k = 0; k < from.size(); ++k) a.flags[from[k]] = to[k];
  return a;
}

// Transposition of the first two items and the full cycle, as flag lists.
template <class Item, class Flatten>
void symmetric_generators(const SusyGraph& g, const std::vector<Item>& items, Flatten flatten,
                          std::vector<Automorphism>& out) {
  if (items.size() < 2) return;
  std::vector<Item> swapped = items;
  std::swap(swapped[0], swapped[1]);
  out.push_back(flag_permutation(g, flatten(items), flatten(swapped)));
  if (items.size() > 2) {
    std::vector<Item> rotated(items.begin() + 1, items.end());
    rotated.push_back(items.front());
    out.push_back(flag_permutation(g, flatten(items), flatten(rotated)));
  }
}

std::vector<FlagId> flatten_pairs(const std::vector<FlagPair>& pairs) {
  std::vector<FlagId> out;
  for (const auto& [a, b] : pairs) {
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

std::set<std::vector<int>> closure(const std::vector<std::vector<int>>& gens, int n) {
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::set<std::vector<int>> group{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier) {
      for (const auto& gen : gens) {
        std::vector<int> q(n);
        for (int i = 0; i < n; ++i) q[i] = gen[p[i]];
        if (group.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return group;
}

}  // namespace

CanonicalForm canonical_form(const SusyGraph& g, bool labels_fixed) {
  require_valid(g, "canonical_form");
  const Indexed G(g);
  SearchResult r = run_search(G, labels_fixed);
  return build_form(G, g, r.orders.front(), std::move(r.best), labels_fixed);
}

std::optional<SusyMorphism> are_isomorphic(const SusyGraph& g1, const SusyGraph& g2, bool labels_fixed) {
  const CanonicalForm a = canonical_form(g1, labels_fixed);
  const CanonicalForm b = canonical_form(g2, labels_fixed);
  if (a.certificate != b.certificate) return std::nullopt;
  std::map<FlagId, FlagId> back_flags;
  for (const auto& [f, r] : b.flag_witness) back_flags.emplace(r, f);
  std::map<VertexId, VertexId> back_vertices;
  for (const auto& [v, r] : b.vertex_witness) back_vertices.emplace(r, v);
  FlagMap flags;
  for (const auto& [f, r] : a.flag_witness) flags.emplace(f, back_flags.at(r));
  VertexMap vertices;
  for (const auto& [v, r] : a.vertex_witness) vertices.emplace(v, back_vertices.at(r));
  SusyMorphism h = isomorphism(g1, g2, flags, vertices);
  if (labels_fixed && !validate_susy_morphism(h, true).ok()) {
    throw Error("are_isomorphic: witness does not preserve labels");
  }
  return h;
}

AutomorphismGroup automorphisms(const SusyGraph& g, bool labels_fixed) {
  require_valid(g, "automorphisms");
  const Indexed G(g);
  const SearchResult r = run_search(G, labels_fixed);
  const int n = G.size();

  AutomorphismGroup out;
  const auto& base = r.orders.front();
  std::vector<std::vector<int>> vertex_gens;
  std::set<std::vector<int>> generated = closure({}, n);
  for (const auto& other : r.orders) {
    std::vector<int> gamma(n);
    for (int i = 0; i < n; ++i) gamma[base[i]] = other[i];
    if (generated.count(gamma)) continue;
    vertex_gens.push_back(gamma);
    generated = closure(vertex_gens, n);
  }
  for (const auto& gamma : vertex_gens) out.generators.push_back(lift(G, gamma, labels_fixed));

  out.order = r.orders.size();
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < 2; ++c) {
      if (!labels_fixed) {
        out.order = checked_mul(out.order, factorial(G.tails[v][c].size()));
        symmetric_generators(g, G.tails[v][c], [](const std::vector<FlagId>& x) { return x; }, out.generators);
      }
      const auto& loops = G.loops[v][c];
      out.order = checked_mul(out.order, factorial(loops.size()));
      for (std::size_t k = 0; k < loops.size(); ++k) out.order = checked_mul(out.order, 2);
      symmetric_generators(g, loops, flatten_pairs, out.generators);
      if (!loops.empty()) {
        const auto& [a, b] = loops.front();
        out.generators.push_back(flag_permutation(g, {a, b}, {b, a}));
      }
    }
  }
  for (const auto& [key, per] : G.between) {
    for (int c = 0; c < 2; ++c) {
      out.order = checked_mul(out.order, factorial(per[c].size()));
      symmetric_generators(g, per[c], flatten_pairs, out.generators);
    }
  }
  return out;
}

namespace {

const char* const kSplitA = "~a";
const char* const kSplitB = "~b";

void add_edge_flag(SusyGraph& g, const FlagId& f, const VertexId& v) {
  g.graph.flags.insert(f);
  g.graph.boundary[f] = v;
  g.labeling.color[f] = Color::NS;
}

void join(SusyGraph& g, const FlagId& a, const FlagId& b) {
  g.graph.involution[a] = b;
  g.graph.involution[b] = a;
}

// Every stable modular graph with one edge more that contracts onto g.
std::vector<SusyGraph> uncontractions(const SusyGraph& g) {
  std::vector<SusyGraph> out;
  for (const auto& v : g.graph.vertices) {
    const int gv = g.labeling.genus.at(v);
    if (gv >= 1) {
      SusyGraph h = g;
      h.labeling.genus[v] = gv - 1;
      add_edge_flag(h, kSplitA, v);
      add_edge_flag(h, kSplitB, v);
      join(h, kSplitA, kSplitB);
      out.push_back(std::move(h));
    }
    const std::set<FlagId> at = flags_at(g.graph, v);
    const std::vector<FlagId> flags(at.begin(), at.end());
    const std::size_t k = flags.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      if (k > 0 && !(mask & 1)) continue;
      const int in_a = std::popcount(mask);
      const int in_b = static_cast<int>(k) - in_a;
      for (int g1 = 0; g1 <= gv; ++g1) {
        const int g2 = gv - g1;
        if (k == 0 && g1 > g2) continue;
        if (2 * g1 - 2 + in_a + 1 <= 0 || 2 * g2 - 2 + in_b + 1 <= 0) continue;
        SusyGraph h = g;
        const VertexId va = "~a";
        const VertexId vb = "~b";
        h.graph.vertices.erase(v);
        h.labeling.genus.erase(v);
        h.graph.vertices.insert(va);
        h.graph.vertices.insert(vb);
        h.labeling.genus[va] = g1;
        h.labeling.genus[vb] = g2;
        for (std::size_t i = 0; i < k; ++i) h.graph.boundary[flags[i]] = (mask >> i) & 1 ? va : vb;
        add_edge_flag(h, kSplitA, va);
        add_edge_flag(h, kSplitB, vb);
        join(h, kSplitA, kSplitB);
        out.push_back(std::move(h));
      }
    }
  }
  return out;
}

}  // namespace

EnumerationResult enumerate_strata(int g, const std::set<Label>& ns, const std::set<Label>& r,
                                   const EnumerationLimits& limits) {
  if (g < 0) throw Error("enumerate: negative genus");
  for (const auto& l : ns) {
    if (r.count(l)) throw Error("enumerate: label '" + l + "' is both NS and R");
  }
  std::set<Label> all = ns;
  all.insert(r.begin(), r.end());
  for (const auto& l : all) {
    if (l.empty() || l.front() == '~') throw Error("enumerate: label '" + l + "' is empty or starts with '~'");
  }
  if (r.size() % 2 != 0) throw Error("enumerate: odd number of Ramond labels");
  const int n = static_cast<int>(all.size());
  if (2 * g - 2 + n <= 0) throw Error("enumerate: unstable parameters (2g-2+#I <= 0)");
  const int max_edges = 3 * g - 3 + n;
  if (max_edges > limits.max_edges) {
    throw Error("enumerate: 3g-3+#I = " + std::to_string(max_edges) + " exceeds the limit " +
                std::to_string(limits.max_edges));
  }

  EnumerationResult out;
  std::map<std::string, SusyGraph> level;
  {
    SusyGraph c = make_modular(corolla("v0", all), {{"v0", g}});
    auto cf = canonical_form(c);
    level.emplace(cf.certificate, cf.representative);
  }
  std::vector<SusyGraph> shapes;
  for (int edges = 0;; ++edges) {
    for (const auto& [cert, shape] : level) shapes.push_back(shape);
    if (edges == max_edges) break;
    std::map<std::string, SusyGraph> next;
    for (const auto& [cert, shape] : level) {
      for (const auto& h : uncontractions(shape)) {
        auto cf = canonical_form(h);
        next.emplace(std::move(cf.certificate), std::move(cf.representative));
      }
    }
    if (next.empty()) break;
    level = std::move(next);
  }

  const TailPartition partition{ns, r};
  std::map<std::string, std::size_t> seen;
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    ShapeRecord rec;
    rec.shape = shapes[s];
    rec.betti = first_betti_number(shapes[s].graph);
    rec.expected = lift_count_general(shapes[s], partition);
    const auto lifts = all_lifts(shapes[s], partition);
    rec.colorings = lifts.size();
    out.raw_count += lifts.size();
    for (const auto& lifted : lifts) {
      auto cf = canonical_form(lifted);
      auto it = seen.find(cf.certificate);
      if (it == seen.end()) {
        seen.emplace(cf.certificate, out.strata.size());
        out.strata.push_back({std::move(cf.representative), std::move(cf.certificate), s, 1});
      } else {
        ++out.strata[it->second].multiplicity;
      }
    }
    out.shapes.push_back(std::move(rec));
  }
  std::stable_sort(out.strata.begin(), out.strata.end(), [](const Stratum& a, const Stratum& b) {
    return std::make_pair(edges(a.graph.graph).size(), std::cref(a.certificate)) <
           std::make_pair(edges(b.graph.graph).size(), std::cref(b.certificate));
  });
  return out;
}

ContractionPoset contraction_poset(const std::vector<Stratum>& strata) {
  ContractionPoset poset;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    index.emplace(strata[i].certificate, i);
    poset.rank.push_back(static_cast<int>(edges(strata[i].graph.graph).size()));
  }
  std::set<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    for (const auto& e : edges(strata[i].graph.graph)) {
      const SusyGraph contracted = contract_edge(strata[i].graph, e).target;
      auto it = index.find(canonical_form(contracted).certificate);
      if (it == index.end()) throw Error("contraction_poset: a contraction of stratum " + std::to_string(i) + " is not in the list");
      covers.insert({i, it->second});
    }
  }
  poset.covers.assign(covers.begin(), covers.end());
  std::set<std::size_t> lower;
  for (const auto& [lo, hi] : covers) lower.insert(lo);
  for (std::size_t i = 0; i < strata.size(); ++i) {
    if (!lower.count(i)) poset.maximal.push_back(i);
  }
  return poset;
}

}  // namespace susy

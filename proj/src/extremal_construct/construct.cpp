// Copyright 2026 The planturan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "planturan/construct.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <unordered_map>

#include "planturan/error.hpp"
#include "planturan/fixtures.hpp"
#include "planturan/planarity.hpp"

namespace planturan {
namespace {

// Mutable rotation system keyed by vertex name, used while stitching.
struct Stitch {
  std::vector<std::string> order;
  std::unordered_map<std::string, std::vector<std::string>> rot;
  std::set<std::string> removed;

  void put(const std::string& v, std::vector<std::string> r) {
    if (!rot.count(v)) order.push_back(v);
    rot[v] = std::move(r);
  }
  // Replaces neighbour `old` of x by the sequence seq, in place.
  void splice(const std::string& x, const std::string& old, const std::vector<std::string>& seq) {
    auto& r = rot.at(x);
    auto it = std::find(r.begin(), r.end(), old);
    if (it == r.end()) throw Error(ErrorCode::kInvalidTk, old + " is not a neighbour of " + x);
    it = r.erase(it);
    r.insert(it, seq.begin(), seq.end());
  }
  void remove(const std::string& v) {
    removed.insert(v);
    rot.erase(v);
  }
  PlanarEmbedding embed() const {
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> r;
    for (const auto& v : order) {
      if (removed.count(v)) continue;
      names.push_back(v);
      r.push_back(rot.at(v));
    }
    return PlanarEmbedding::from_rotation(names, r);
  }
};

Stitch stitch_of(const PlanarEmbedding& g) {
  Stitch s;
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<std::string> r;
    for (int u : g.rotation(v)) r.push_back(g.name(u));
    s.put(g.name(v), std::move(r));
  }
  return s;
}

std::vector<std::string> strings(const Json& j) { return j.get<std::vector<std::string>>(); }

struct Template {
  Json rotation;                    // inner vertex -> neighbours
  std::map<std::string, Json> ext;  // attach points or tips
};

const Template& holder() {
  static const Template t = [] {
    Json j = Json::parse(fixture("holder"));
    Template out{j.at("rotation"), {}};
    for (auto& [k, v] : j.at("attach").items()) out.ext[k] = v;
    return out;
  }();
  return t;
}

const Template& snowflake() {
  static const Template t = [] {
    Json j = Json::parse(fixture("snowflake"));
    Template out{j.at("rotation"), {}};
    for (auto& [k, v] : j.at("tips").items()) out.ext[k] = v;
    return out;
  }();
  return t;
}

std::vector<std::string> mapped(const std::vector<std::string>& seq,
                                const std::unordered_map<std::string, std::string>& m) {
  std::vector<std::string> out;
  for (const auto& s : seq) out.push_back(m.at(s));
  return out;
}

void require_valid(const TkInstance& t) {
  TkValidation v = validate_Tk(t);
  if (!v.ok) {
    std::string msg;
    for (const auto& d : v.details) msg += (msg.empty() ? "" : "; ") + d;
    throw Error(ErrorCode::kInvalidTk, msg);
  }
}

PlanarEmbedding fixture_embedding(const std::string& name) {
  return embedding_of(parse_graph_json(std::string(fixture(name))));
}

// Pentagonal piece with a straight-line drawing and two marked 5-rings.
struct Piece {
  std::vector<std::string> names;
  std::vector<std::array<double, 2>> xy;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> inner, outer;
};

Piece load_piece(const std::string& name) {
  Json j = Json::parse(fixture(name));
  Piece p;
  for (auto& [k, v] : j.at("coords").items()) {
    p.names.push_back(k);
    p.xy.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
  }
  for (const auto& e : j.at("edges")) p.edges.emplace_back(e.at(0), e.at(1));
  p.inner = strings(j.at("inner"));
  p.outer = strings(j.at("outer"));
  return p;
}

struct Drawing {
  std::vector<std::string> names;
  std::vector<std::array<double, 2>> xy;
  std::set<Edge> edges;

  int add_vertex(const std::string& name, std::array<double, 2> at) {
    names.push_back(name);
    xy.push_back(at);
    return static_cast<int>(names.size()) - 1;
  }
  void add_edge(int u, int v) { edges.insert({std::min(u, v), std::max(u, v)}); }

  // Places p scaled by s; its inner ring is identified with `glue` when given.
  // Returns the host indices of p's outer ring.
  std::vector<int> add_piece(const Piece& p, double s, const std::string& prefix, const std::vector<int>& glue) {
    std::unordered_map<std::string, int> at;
    for (size_t i = 0; i < glue.size(); ++i) at[p.inner[i]] = glue[i];
    for (size_t i = 0; i < p.names.size(); ++i) {
      if (!at.count(p.names[i])) at[p.names[i]] = add_vertex(prefix + p.names[i], {p.xy[i][0] * s, p.xy[i][1] * s});
    }
    for (const auto& [a, b] : p.edges) add_edge(at.at(a), at.at(b));
    std::vector<int> out;
    for (const auto& v : p.outer) out.push_back(at.at(v));
    return out;
  }

  PlanarEmbedding embed() const {
    Graph g(names);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return embedding_from_coordinates(g, xy);
  }
};

}  // namespace

TkInstance parse_tk(const Json& doc) {
  TkInstance t;
  t.embedding = embedding_of(parse_graph_json(doc.dump()));
  if (!doc.contains("special_edges")) throw Error(ErrorCode::kParseError, "T_k document lacks special_edges");
  for (const auto& e : doc.at("special_edges")) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::kParseError, "special edge must be a pair");
    const Graph& g = t.embedding.graph();
    t.special_edges.emplace_back(g.index_of(e.at(0).get<std::string>()), g.index_of(e.at(1).get<std::string>()));
  }
  return t;
}

TkInstance builtin_T15() { return parse_tk(Json::parse(fixture("t15"))); }

TkValidation validate_Tk(const TkInstance& t) {
  TkValidation r;
  auto reject = [&](const std::string& tag, const std::string& detail) {
    r.ok = false;
    if (std::find(r.reasons.begin(), r.reasons.end(), tag) == r.reasons.end()) r.reasons.push_back(tag);
    r.details.push_back(detail);
  };
  const PlanarEmbedding& g = t.embedding;
  if (g.num_vertices() < 4) reject("notTriangulation", "fewer than 4 vertices");
  for (const Face& f : g.faces()) {
    if (!f.is_triangle()) {
      reject("notTriangulation", "face of size " + std::to_string(f.size()));
      break;
    }
  }
  int four = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const int d = g.graph().degree(v);
    if (d == 4) {
      ++four;
    } else if (d != 6) {
      reject("degreeProfile", g.name(v) + " has degree " + std::to_string(d));
    }
  }
  if (four != 6) reject("degreeProfile", std::to_string(four) + " vertices of degree 4, expected 6");
  if (t.special_edges.size() != 3) reject("specialEdges", "expected 3 special edges");
  std::set<int> ends;
  for (auto [u, v] : t.special_edges) {
    if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices() || !g.graph().has_edge(u, v)) {
      reject("specialEdges", "special edge is not an edge of the triangulation");
      continue;
    }
    for (int x : {u, v}) {
      if (!ends.insert(x).second) reject("specialEdges", "special edges share " + g.name(x));
      if (g.graph().degree(x) != 4) reject("specialEdges", g.name(x) + " on a special edge has degree != 4");
    }
  }
  return r;
}

PlanarEmbedding build_base(const TkInstance& t) {
  require_valid(t);
  const PlanarEmbedding& g = t.embedding;
  std::set<Edge> special;
  for (auto [u, v] : t.special_edges) special.insert({std::min(u, v), std::max(u, v)});
  Stitch s = stitch_of(g);
  for (auto [u, v] : g.edge_list()) {
    const std::string a = g.name(u), b = g.name(v);
    const std::string tag = a + "|" + b;
    if (special.count({u, v})) {
      const Template& h = holder();
      std::unordered_map<std::string, std::string> m{{"u", a}, {"v", b}};
      for (auto& [k, _] : h.rotation.items()) m[k] = tag + "|" + k;
      s.splice(a, b, mapped(strings(h.ext.at("u")), m));
      s.splice(b, a, mapped(strings(h.ext.at("v")), m));
      for (auto& [k, r] : h.rotation.items()) s.put(m[k], mapped(strings(r), m));
    } else {
      s.splice(a, b, {tag});
      s.splice(b, a, {tag});
      s.put(tag, {a, b});
    }
  }
  return s.embed();
}

PlanarEmbedding build_extremal(const TkInstance& t, ConstructionTrace* trace) {
  PlanarEmbedding base = build_base(t);
  Stitch s = stitch_of(base);
  const Template& sf = snowflake();
  for (int c = 0; c < t.k(); ++c) {
    const std::string center = t.embedding.name(c);
    const std::vector<std::string> leaves = s.rot.at(center);
    if (leaves.size() != 6) throw Error(ErrorCode::kInvalidTk, center + " is not a 6-star centre in the base graph");
    std::unordered_map<std::string, std::string> m;
    for (auto& [k, _] : sf.rotation.items()) m[k] = center + "/" + k;
    for (int i = 0; i < 6; ++i) m["t" + std::to_string(i)] = leaves[i];
    for (auto& [k, r] : sf.rotation.items()) s.put(m[k], mapped(strings(r), m));
    for (int i = 0; i < 6; ++i) s.splice(leaves[i], center, mapped(strings(sf.ext.at("t" + std::to_string(i))), m));
    s.remove(center);
  }
  PlanarEmbedding out = s.embed();
  if (trace) {
    trace->k = t.k();
    trace->subdivision_count = t.embedding.num_edges() - static_cast<int>(t.special_edges.size());
    trace->holder_count = static_cast<int>(t.special_edges.size());
    trace->snowflake_count = t.k();
    trace->n = out.num_vertices();
    trace->e = out.num_edges();
  }
  return out;
}

PlanarEmbedding builtin_counterexample_13() { return fixture_embedding("counterexample13"); }

std::map<std::string, PlanarEmbedding> builtin_small_structures() {
  std::map<std::string, PlanarEmbedding> out;
  for (const char* name : {"fig7", "fig8a", "fig8b", "fig8c"}) out[name] = fixture_embedding(name);
  return out;
}

PlanarEmbedding build_theta61_pentagonal(int levels, PentagonalStats* stats) {
  if (levels < 1) throw Error(ErrorCode::kParseError, "levels must be at least 1");
  static const Piece core = load_piece("pentagon_core");
  static const Piece ring = load_piece("pentagon_ring");
  // Ring radii are 10 and 45, so consecutive pieces differ by a factor 4.5.
  constexpr double kStep = 4.5;
  Drawing d;
  std::vector<int> outer = d.add_piece(core, 1.0, "P0.", {});
  double scale = 1.0;
  for (int t = 1; t < levels; ++t) {
    scale *= kStep;
    outer = d.add_piece(ring, scale, "P" + std::to_string(2 * t - 1) + ".", outer);
    scale *= kStep;
    outer = d.add_piece(core, scale, "P" + std::to_string(2 * t) + ".", outer);
  }
  const PlanarEmbedding skeleton = d.embed();
  int planted = 0;
  for (const Face& f : skeleton.faces()) {
    if (!f.is_triangle()) continue;
    std::array<int, 3> c = {f.vertices[0], f.vertices[1], f.vertices[2]};
    std::sort(c.begin(), c.end());  // c[0] is the tip, missing the edge to m
    const std::string tag = "T" + std::to_string(planted++) + ".";
    std::array<double, 2> centroid{};
    for (int x : c) {
      centroid[0] += d.xy[x][0] / 3;
      centroid[1] += d.xy[x][1] / 3;
    }
    const std::array<double, 2> mid = {(d.xy[c[1]][0] + d.xy[c[2]][0]) / 2, (d.xy[c[1]][1] + d.xy[c[2]][1]) / 2};
    const int p = d.add_vertex(tag + "p", centroid);
    const int m = d.add_vertex(tag + "m", {(centroid[0] + mid[0]) / 2, (centroid[1] + mid[1]) / 2});
    for (int x : c) d.add_edge(p, x);
    d.add_edge(m, p);
    d.add_edge(m, c[1]);
    d.add_edge(m, c[2]);
  }
  PlanarEmbedding out = d.embed();
  if (stats) {
    stats->levels = levels;
    stats->n = out.num_vertices();
    stats->e = out.num_edges();
    stats->k5_count = planted;
    stats->face_sizes.clear();
    for (const Face& f : out.faces()) ++stats->face_sizes[f.size()];
  }
  return out;
}

}  // namespace planturan

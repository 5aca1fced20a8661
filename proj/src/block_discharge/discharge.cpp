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

#include "planturan/discharge.hpp"

#include <algorithm>
#include <map>

#include "planturan/blocks.hpp"

namespace planturan {
namespace {

struct Segment {
  int block = -1;
  int face = -1;
  std::vector<int> vertices;  // closed walk when the face has no junction
  bool bad = false;
};

// Per-face split into segments between consecutive junction vertices.
struct Analysis {
  std::vector<std::vector<Segment>> face_segments;  // empty for 3-faces
  std::vector<int> refined_size;                    // per face

  Analysis(const PlanarEmbedding& g, const Decomposition& d) {
    const auto& faces = g.faces();
    face_segments.resize(faces.size());
    refined_size.assign(faces.size(), 3);
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
      const Face& f = faces[fi];
      if (f.is_triangle()) continue;
      const int m = f.size();
      std::vector<int> junctions;
      for (int i = 0; i < m; ++i) {
        if (d.is_junction(f.vertices[i])) junctions.push_back(i);
      }
      auto& segs = face_segments[fi];
      if (junctions.empty()) {
        Segment s{d.block_of_edge[g.edge_of(f.darts[0])], fi, f.vertices, false};
        s.vertices.push_back(f.vertices[0]);
        segs.push_back(std::move(s));
      } else {
        const int nj = static_cast<int>(junctions.size());
        for (int a = 0; a < nj; ++a) {
          const int i = junctions[a];
          int len = (junctions[(a + 1) % nj] - i + m) % m;
          if (len == 0) len = m;
          Segment s;
          s.face = fi;
          s.block = d.block_of_edge[g.edge_of(f.darts[i])];
          for (int t = 0; t <= len; ++t) s.vertices.push_back(f.vertices[(i + t) % m]);
          if (len == 2) {
            const int x = s.vertices[0], z = s.vertices[2];
            s.bad = x != z && g.graph().has_edge(x, z) && d.block_of(g, x, z) == s.block;
          }
          segs.push_back(std::move(s));
        }
      }
      int bad = 0;
      for (const auto& s : segs) bad += s.bad ? 1 : 0;
      refined_size[fi] = m - bad;
    }
  }
};

Contribution contribution_of(const PlanarEmbedding& g, const Decomposition& d, const Analysis& a, int block) {
  const TriangularBlock& b = d.blocks[block];
  Contribution c;
  c.e = b.num_edges();
  for (int v : b.vertices) c.n += Rational(1, d.block_count[v]);
  c.f = Rational(b.triangular_face_count);
  for (int fi = 0; fi < static_cast<int>(a.face_segments.size()); ++fi) {
    for (const auto& s : a.face_segments[fi]) {
      if (s.block != block) continue;
      const int len = static_cast<int>(s.vertices.size()) - 1;
      c.f += Rational(s.bad ? 1 : len, a.refined_size[fi]);
    }
  }
  c.g = Rational(24) * c.f - Rational(17 * c.e) + Rational(6) * c.n;
  (void)g;
  return c;
}

std::vector<ExteriorPath> paths_of(const Decomposition& d, const Analysis& a, int block) {
  std::vector<ExteriorPath> out;
  (void)d;
  for (const auto& segs : a.face_segments) {
    for (const auto& s : segs) {
      if (s.block == block) out.push_back({s.vertices, s.face, s.bad});
    }
  }
  return out;
}

// The four bad trivial blocks of a B4b whose two exterior paths x2 x1 x4 and
// x2 x3 x4 each lie on a 4-face, or nothing when the configuration differs.
std::optional<std::vector<int>> case_c_bad_blocks(const PlanarEmbedding& g, const Decomposition& d,
                                                  const Analysis& a, int block) {
  const TriangularBlock& b = d.blocks[block];
  if (b.kind != BlockKind::kB4b) return std::nullopt;
  std::map<int, int> deg;
  for (int e : b.edges) {
    ++deg[g.edge_list()[e].first];
    ++deg[g.edge_list()[e].second];
  }
  std::vector<int> poles, inner;
  for (auto [v, k] : deg) (k == 2 ? poles : inner).push_back(v);
  if (poles.size() != 2 || inner.size() != 2) return std::nullopt;
  for (int v : inner) {
    if (d.is_junction(v)) return std::nullopt;
  }
  auto paths = paths_of(d, a, block);
  if (paths.size() != 2) return std::nullopt;
  std::vector<int> bad;
  std::vector<int> middles;
  for (const auto& p : paths) {
    if (p.length() != 2) return std::nullopt;
    const std::vector<int> ends = {std::min(p.vertices[0], p.vertices[2]), std::max(p.vertices[0], p.vertices[2])};
    if (ends != poles) return std::nullopt;
    middles.push_back(p.vertices[1]);
    const Face& f = g.faces()[p.face];
    if (f.size() != 4) return std::nullopt;
    for (int dart : f.darts) {
      int blk = d.block_of_edge[g.edge_of(dart)];
      if (blk == block) continue;
      if (d.blocks[blk].kind != BlockKind::kB2) return std::nullopt;
      bad.push_back(blk);
    }
  }
  std::sort(middles.begin(), middles.end());
  if (middles != inner) return std::nullopt;
  std::sort(bad.begin(), bad.end());
  if (std::unique(bad.begin(), bad.end()) != bad.end() || bad.size() != 4) return std::nullopt;
  return bad;
}

Grouping group(const PlanarEmbedding& g, const Decomposition& d, const Analysis& a) {
  Grouping out;
  std::vector<int> owner(d.blocks.size(), -1);
  for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b) {
    auto bad = case_c_bad_blocks(g, d, a, b);
    if (!bad) continue;
    for (int x : *bad) {
      if (owner[x] >= 0) throw SharedBadBlock(x, owner[x], b);
      owner[x] = b;
    }
    std::vector<int> grp{b};
    grp.insert(grp.end(), bad->begin(), bad->end());
    owner[b] = b;
    out.groups.push_back(std::move(grp));
  }
  std::vector<int> residual;
  for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b) {
    if (owner[b] < 0) residual.push_back(b);
  }
  out.groups.push_back(std::move(residual));
  return out;
}

Json rational_json(const Rational& r) { return r.str(); }

}  // namespace

std::string reason_name(HypothesisReason r) {
  switch (r) {
    case HypothesisReason::kNot2Conn: return "not2conn";
    case HypothesisReason::kMinDeg: return "minDeg";
    case HypothesisReason::kSingleBlock: return "singleBlock";
  }
  return "?";
}

void check_standing_hypothesis(const PlanarEmbedding& g, const Decomposition& d) {
  if (!is_2_connected(g)) throw HypothesisViolated(HypothesisReason::kNot2Conn);
  if (min_degree(g) < 3) throw HypothesisViolated(HypothesisReason::kMinDeg);
  if (d.blocks.size() < 2) throw HypothesisViolated(HypothesisReason::kSingleBlock);
}

std::vector<ExteriorPath> exterior_structure(const PlanarEmbedding& g, const Decomposition& d, int block) {
  check_standing_hypothesis(g, d);
  return paths_of(d, Analysis(g, d), block);
}

FaceRefinement refine_face(const PlanarEmbedding& g, const Decomposition& d, int face) {
  check_standing_hypothesis(g, d);
  Analysis a(g, d);
  FaceRefinement r;
  r.face = face;
  r.size = g.faces()[face].size();
  r.refined_size = a.refined_size[face];
  for (const auto& s : a.face_segments[face]) {
    if (s.bad) r.bad_cherries.push_back({s.vertices[0], s.vertices[1], s.vertices[2]});
  }
  return r;
}

Contribution contributions(const PlanarEmbedding& g, const Decomposition& d, int block) {
  check_standing_hypothesis(g, d);
  return contribution_of(g, d, Analysis(g, d), block);
}

Grouping partition_groups(const PlanarEmbedding& g, const Decomposition& d) {
  check_standing_hypothesis(g, d);
  return group(g, d, Analysis(g, d));
}

bool ChargeReport::identities_hold() const {
  return sum_e == e && sum_n == Rational(v) && sum_f == Rational(f) && total == euler_total;
}

bool ChargeReport::per_block_ok() const {
  return std::all_of(per_block.begin(), per_block.end(), [](const BlockCharge& b) { return b.within_bound; });
}

bool ChargeReport::groups_ok() const {
  return std::all_of(group_sums.begin(), group_sums.end(), [](const Rational& s) { return s <= Rational(0); });
}

ChargeReport audit_known_free(const PlanarEmbedding& g, const Decomposition& d) {
  check_standing_hypothesis(g, d);
  for (const auto& b : d.blocks) {
    if (!b.kind) classify(g, b.edges);  // rethrows kUnknownBlockShape with detail
  }
  Analysis a(g, d);
  ChargeReport r;
  r.v = g.num_vertices();
  r.e = g.num_edges();
  r.f = g.num_faces();
  r.grouping = group(g, d, a);
  for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b) {
    BlockCharge bc;
    bc.block = b;
    bc.kind = *d.blocks[b].kind;
    bc.c = contribution_of(g, d, a, b);
    bc.bound = Rational(bc.kind == BlockKind::kB4b ? 3 : 0);
    bc.within_bound = bc.c.g <= bc.bound;
    bc.face_count_matches_template = d.blocks[b].face_count_matches_template();
    r.sum_e += bc.c.e;
    r.sum_n += bc.c.n;
    r.sum_f += bc.c.f;
    r.total += bc.c.g;
    r.per_block.push_back(bc);
  }
  for (const auto& grp : r.grouping.groups) {
    Rational s;
    for (int b : grp) s += r.per_block[b].c.g;
    r.group_sums.push_back(s);
  }
  r.euler_total = Rational(24 * r.f - 17 * r.e + 6 * r.v);
  return r;
}

ChargeReport audit(const PlanarEmbedding& g) {
  Decomposition d = decompose(g);
  check_standing_hypothesis(g, d);
  if (auto w = find_theta(g.graph(), 6)) throw ThetaFound(*w);
  return audit_known_free(g, d);
}

Json decomposition_to_json(const PlanarEmbedding& g, const Decomposition& d) {
  Json j;
  j["blocks"] = Json::array();
  for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b) {
    const auto& blk = d.blocks[b];
    Json row;
    row["index"] = b;
    row["kind"] = blk.kind ? Json(kind_name(*blk.kind)) : Json(nullptr);
    row["vertices"] = Json::array();
    for (int v : blk.vertices) row["vertices"].push_back(g.name(v));
    row["edges"] = Json::array();
    for (int e : blk.edges) row["edges"].push_back({g.name(g.edge_list()[e].first), g.name(g.edge_list()[e].second)});
    row["triangular_faces"] = blk.triangular_face_count;
    row["nested"] = blk.kind.has_value() && !blk.face_count_matches_template();
    j["blocks"].push_back(row);
  }
  j["junctions"] = Json::object();
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (d.is_junction(v)) j["junctions"][g.name(v)] = d.block_count[v];
  }
  // Refinements are reported for any host, not only ones meeting the hypothesis.
  const Analysis a(g, d);
  j["faces"] = Json::array();
  for (int f = 0; f < static_cast<int>(g.faces().size()); ++f) {
    if (g.faces()[f].is_triangle()) continue;
    Json row;
    row["index"] = f;
    row["vertices"] = Json::array();
    for (int v : g.faces()[f].vertices) row["vertices"].push_back(g.name(v));
    row["size"] = g.faces()[f].size();
    row["refined_size"] = a.refined_size[f];
    row["bad_cherries"] = Json::array();
    for (const auto& s : a.face_segments[f]) {
      if (s.bad) row["bad_cherries"].push_back({g.name(s.vertices[0]), g.name(s.vertices[1]), g.name(s.vertices[2])});
    }
    j["faces"].push_back(row);
  }
  return j;
}

Json charge_report_to_json(const PlanarEmbedding& g, const Decomposition& d, const ChargeReport& r) {
  Json j;
  j["v"] = r.v;
  j["e"] = r.e;
  j["f"] = r.f;
  j["blocks"] = Json::array();
  for (const auto& bc : r.per_block) {
    Json row;
    row["index"] = bc.block;
    row["kind"] = kind_name(bc.kind);
    row["vertices"] = Json::array();
    for (int v : d.blocks[bc.block].vertices) row["vertices"].push_back(g.name(v));
    row["e"] = bc.c.e;
    row["n"] = rational_json(bc.c.n);
    row["f"] = rational_json(bc.c.f);
    row["g"] = rational_json(bc.c.g);
    row["bound"] = rational_json(bc.bound);
    row["within_bound"] = bc.within_bound;
    row["nested"] = !bc.face_count_matches_template;
    j["blocks"].push_back(row);
  }
  j["groups"] = Json::array();
  for (size_t i = 0; i < r.grouping.groups.size(); ++i) {
    const bool residual = i + 1 == r.grouping.groups.size();
    j["groups"].push_back({{"kind", residual ? "residual" : "B4b"},
                           {"blocks", r.grouping.groups[i]},
                           {"sum", rational_json(r.group_sums[i])}});
  }
  j["identities"] = {{"sum_e", r.sum_e},
                     {"sum_n", rational_json(r.sum_n)},
                     {"sum_f", rational_json(r.sum_f)},
                     {"hold", r.identities_hold()}};
  j["total"] = rational_json(r.total);
  j["verdict"] = {{"per_block", r.per_block_ok()},
                  {"groups", r.groups_ok()},
                  {"total", r.total_ok()},
                  {"pass", r.passed()}};
  return j;
}

}  // namespace planturan

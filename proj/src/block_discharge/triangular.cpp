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

#include "planturan/triangular.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "planturan/canonical.hpp"
#include "planturan/error.hpp"
#include "planturan/fixtures.hpp"
#include "planturan/io.hpp"

namespace planturan {
namespace {

constexpr std::array<BlockKind, 8> kAllKinds = {BlockKind::kB2,  BlockKind::kB3,  BlockKind::kB4a,
                                                 BlockKind::kB4b, BlockKind::kB5a, BlockKind::kB5b,
                                                 BlockKind::kB5c, BlockKind::kB5d};

struct Template {
  BlockKind kind;
  std::string code;
};

const std::vector<Template>& templates() {
  static const std::vector<Template> table = [] {
    std::vector<Template> t;
    for (BlockKind k : kAllKinds) {
      auto doc = parse_graph_json(std::string(fixture("blocks/" + kind_name(k))));
      t.push_back({k, canonical_code(doc.graph)});
    }
    return t;
  }();
  return table;
}

// Closure of one edge under "absorb the edges of every incident 3-face".
std::vector<int> closure(const PlanarEmbedding& g, int start, std::vector<char>& taken) {
  std::vector<int> out{start}, stack{start};
  taken[start] = 1;
  const auto& faces = g.faces();
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    auto [u, v] = g.edge_list()[e];
    for (int d : {g.dart(u, v), g.dart(v, u)}) {
      const Face& f = faces[g.face_of(d)];
      if (!f.is_triangle()) continue;
      for (int fd : f.darts) {
        int fe = g.edge_of(fd);
        if (!taken[fe]) {
          taken[fe] = 1;
          out.push_back(fe);
          stack.push_back(fe);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TriangularBlock make_block(const PlanarEmbedding& g, std::vector<int> edges) {
  TriangularBlock b;
  b.edges = std::move(edges);
  for (int e : b.edges) {
    b.vertices.push_back(g.edge_list()[e].first);
    b.vertices.push_back(g.edge_list()[e].second);
  }
  std::sort(b.vertices.begin(), b.vertices.end());
  b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
  for (const Face& f : g.faces()) {
    if (f.is_triangle() && std::binary_search(b.edges.begin(), b.edges.end(), g.edge_of(f.darts[0]))) {
      ++b.triangular_face_count;
    }
  }
  try {
    b.kind = classify(g, b.edges);
  } catch (const Error&) {
    b.kind.reset();
  }
  return b;
}

}  // namespace

std::string kind_name(BlockKind k) {
  switch (k) {
    case BlockKind::kB2: return "B2";
    case BlockKind::kB3: return "B3";
    case BlockKind::kB4a: return "B4a";
    case BlockKind::kB4b: return "B4b";
    case BlockKind::kB5a: return "B5a";
    case BlockKind::kB5b: return "B5b";
    case BlockKind::kB5c: return "B5c";
    case BlockKind::kB5d: return "B5d";
  }
  return "?";
}

int template_face_count(BlockKind k) {
  switch (k) {
    case BlockKind::kB2: return 0;
    case BlockKind::kB3: return 1;
    case BlockKind::kB4a: return 3;
    case BlockKind::kB4b: return 2;
    case BlockKind::kB5a: return 5;
    case BlockKind::kB5b: return 4;
    case BlockKind::kB5c: return 4;
    case BlockKind::kB5d: return 3;
  }
  return -1;
}

Graph edge_subgraph(const PlanarEmbedding& g, const std::vector<int>& edge_ids) {
  std::vector<int> verts;
  for (int e : edge_ids) {
    verts.push_back(g.edge_list()[e].first);
    verts.push_back(g.edge_list()[e].second);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  Graph h;
  for (int v : verts) h.add_vertex(g.name(v));
  for (int e : edge_ids) h.add_edge(g.name(g.edge_list()[e].first), g.name(g.edge_list()[e].second));
  return h;
}

BlockKind classify(const Graph& block) {
  if (block.num_vertices() > 5 || block.num_vertices() < 2) {
    throw Error(ErrorCode::kUnknownBlockShape,
                "block on " + std::to_string(block.num_vertices()) + " vertices");
  }
  const std::string code = canonical_code(block);
  for (const auto& t : templates()) {
    if (t.code == code) return t.kind;
  }
  throw Error(ErrorCode::kUnknownBlockShape, "no template with " + std::to_string(block.num_vertices()) +
                                                 " vertices and " + std::to_string(block.num_edges()) +
                                                 " edges matches");
}

BlockKind classify(const PlanarEmbedding& g, const std::vector<int>& edge_ids) {
  return classify(edge_subgraph(g, edge_ids));
}

TriangularBlock triangular_block_of(const PlanarEmbedding& g, Edge e) {
  if (e.first < 0 || e.second < 0 || e.first >= g.num_vertices() || e.second >= g.num_vertices() ||
      !g.graph().has_edge(e.first, e.second)) {
    throw Error(ErrorCode::kEdgeNotInGraph, "edge is not in the graph");
  }
  std::vector<char> taken(g.num_edges(), 0);
  return make_block(g, closure(g, g.edge_id(e.first, e.second), taken));
}

Decomposition decompose(const PlanarEmbedding& g) {
  Decomposition d;
  d.block_of_edge.assign(g.num_edges(), -1);
  d.block_count.assign(g.num_vertices(), 0);
  std::vector<char> taken(g.num_edges(), 0);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (taken[e]) continue;
    TriangularBlock b = make_block(g, closure(g, e, taken));
    for (int x : b.edges) d.block_of_edge[x] = static_cast<int>(d.blocks.size());
    for (int v : b.vertices) ++d.block_count[v];
    d.blocks.push_back(std::move(b));
  }
  return d;
}

}  // namespace planturan

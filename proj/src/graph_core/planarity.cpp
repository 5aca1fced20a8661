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

#include "planturan/planarity.hpp"

#include <algorithm>
#include <cmath>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "planturan/error.hpp"

namespace planturan {
namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(g.num_vertices());
  int idx = 0;
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, idx++, bg);
  return bg;
}

}  // namespace

bool is_planar(const Graph& g) {
  const int n = g.num_vertices();
  if (n >= 3 && g.num_edges() > 3 * n - 6) return false;
  if (n <= 4) return true;
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

PlanarEmbedding planarity_embed(const Graph& g) {
  const int n = g.num_vertices();
  if (n >= 3 && g.num_edges() > 3 * n - 6) {
    throw Error(ErrorCode::kNonPlanarGraph, "more than 3n-6 edges");
  }
  BoostGraph bg = to_boost(g);
  std::vector<std::vector<BoostEdge>> emb(n);
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                           boost::boyer_myrvold_params::embedding = &emb[0])) {
    throw Error(ErrorCode::kNonPlanarGraph, "no plane embedding exists");
  }
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    for (const auto& e : emb[v]) {
      int a = static_cast<int>(boost::source(e, bg)), b = static_cast<int>(boost::target(e, bg));
      rot[v].push_back(a == v ? b : a);
    }
  }
  return PlanarEmbedding::from_rotation(g.names(), std::move(rot));
}

PlanarEmbedding embedding_from_coordinates(const Graph& g, const std::vector<std::array<double, 2>>& xy) {
  std::vector<std::vector<int>> rot(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    rot[v] = g.neighbors(v);
    auto angle = [&](int u) { return std::atan2(xy[u][1] - xy[v][1], xy[u][0] - xy[v][0]); };
    std::stable_sort(rot[v].begin(), rot[v].end(), [&](int a, int b) { return angle(a) < angle(b); });
  }
  return PlanarEmbedding::from_rotation(g.names(), std::move(rot));
}

}  // namespace planturan

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

#include "planturan/blocks.hpp"

#include <algorithm>

namespace planturan {

// Iterative Hopcroft-Tarjan over an explicit edge stack.
BlockCutForest block_cut_forest(const Graph& g) {
  const int n = g.num_vertices();
  BlockCutForest out;
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next_child(n, 0);
  std::vector<Edge> estack;
  std::vector<char> is_cut(n, 0);
  int timer = 0;

  auto pop_block = [&](int u, int v) {
    std::vector<int> verts;
    std::vector<Edge> es;
    while (true) {
      Edge e = estack.back();
      estack.pop_back();
      es.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
      verts.push_back(e.first);
      verts.push_back(e.second);
      if (e.first == u && e.second == v) break;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::sort(es.begin(), es.end());
    out.blocks.push_back(std::move(verts));
    out.block_edges.push_back(std::move(es));
  };

  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    if (g.degree(root) == 0) {
      disc[root] = timer++;
      out.blocks.push_back({root});
      out.block_edges.emplace_back();
      continue;
    }
    int root_children = 0;
    std::vector<int> stack{root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      int v = stack.back();
      const auto& nb = g.neighbors(v);
      if (next_child[v] < static_cast<int>(nb.size())) {
        int w = nb[next_child[v]++];
        if (disc[w] < 0) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          estack.emplace_back(v, w);
          if (v == root) ++root_children;
          stack.push_back(w);
        } else if (w != parent[v] && disc[w] < disc[v]) {
          estack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      int p = parent[v];
      if (p < 0) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        if (p != root) is_cut[p] = 1;
        pop_block(p, v);
      }
    }
    if (root_children > 1) is_cut[root] = 1;
  }

  for (int v = 0; v < n; ++v) {
    if (is_cut[v]) out.cut_vertices.push_back(v);
  }
  for (const auto& b : out.blocks) {
    std::vector<int> inc;
    for (int v : b) {
      if (is_cut[v]) inc.push_back(v);
    }
    out.incidence.push_back(std::move(inc));
  }
  return out;
}

bool is_2_connected(const Graph& g) {
  if (g.num_vertices() < 2 || !is_connected(g)) return false;
  return block_cut_forest(g).num_blocks() == 1;
}

}  // namespace planturan

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

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "planturan/canonical.hpp"
#include "planturan/embedding.hpp"
#include "planturan/fixtures.hpp"
#include "planturan/graph.hpp"
#include "planturan/io.hpp"

namespace planturan::testing {

inline PlanarEmbedding embed(const std::vector<std::string>& names,
                             const std::vector<std::vector<std::string>>& rot) {
  return PlanarEmbedding::from_rotation(names, rot);
}

inline PlanarEmbedding fixture_graph(const std::string& name) {
  return embedding_of(parse_graph_json(std::string(fixture(name))));
}

inline Graph graph_of(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

// Cycle rotation: each vertex sees its two neighbours.
inline PlanarEmbedding cycle_embedding(int n) {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> rot;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) rot.push_back({names[(i + n - 1) % n], names[(i + 1) % n]});
  return embed(names, rot);
}

// K4 with a central vertex d inside triangle a b c.
inline PlanarEmbedding k4_embedding() {
  return embed({"a", "b", "c", "d"}, {{"b", "d", "c"}, {"c", "d", "a"}, {"a", "d", "b"}, {"a", "b", "c"}});
}

// Same graph with vertices renamed through perm (perm[i] = new index of i).
inline SmallGraph permuted(const SmallGraph& g, const std::vector<int>& perm) {
  SmallGraph h;
  h.n = g.n;
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

// Canonical form by brute force over all vertex permutations: the
// lexicographically largest upper-triangle bit string.
inline std::vector<bool> brute_canonical(const SmallGraph& g) {
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> bits;
    for (int i = 0; i < g.n; ++i) {
      for (int j = i + 1; j < g.n; ++j) bits.push_back(g.has_edge(perm[i], perm[j]));
    }
    if (bits > best) best = bits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::multiset<std::multiset<std::string>> face_vertex_sets(const PlanarEmbedding& g) {
  std::multiset<std::multiset<std::string>> out;
  for (const Face& f : g.faces()) {
    std::multiset<std::string> s;
    for (int v : f.vertices) s.insert(g.name(v));
    out.insert(s);
  }
  return out;
}

}  // namespace planturan::testing

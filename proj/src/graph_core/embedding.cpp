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

#include "planturan/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "planturan/error.hpp"

namespace planturan {

PlanarEmbedding PlanarEmbedding::from_rotation(
    const std::vector<std::string>& names, const std::vector<std::vector<std::string>>& rotation) {
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) {
    if (!index.emplace(names[i], i).second) {
      throw Error(ErrorCode::kParseError, "vertex '" + names[i] + "' listed twice");
    }
  }
  std::vector<std::vector<int>> rot(names.size());
  for (size_t v = 0; v < names.size(); ++v) {
    for (const auto& u : rotation[v]) {
      auto it = index.find(u);
      if (it == index.end()) {
        throw Error(ErrorCode::kAsymmetricRotation,
                    "'" + u + "' appears around '" + names[v] + "' but has no rotation");
      }
      rot[v].push_back(it->second);
    }
  }
  return from_rotation(names, std::move(rot));
}

PlanarEmbedding PlanarEmbedding::from_rotation(std::vector<std::string> names,
                                               std::vector<std::vector<int>> rotation) {
  PlanarEmbedding g;
  const int n = static_cast<int>(names.size());
  g.graph_ = Graph(names);
  for (int v = 0; v < n; ++v) {
    std::vector<int> seen = rotation[v];
    std::sort(seen.begin(), seen.end());
    for (size_t i = 0; i < seen.size(); ++i) {
      if (seen[i] == v) throw Error(ErrorCode::kSelfLoop, "loop at '" + names[v] + "'");
      if (i > 0 && seen[i] == seen[i - 1]) {
        throw Error(ErrorCode::kDuplicateNeighbor, "'" + names[seen[i]] + "' repeated around '" + names[v] + "'");
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    for (int u : rotation[v]) {
      const auto& back = rotation[u];
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        throw Error(ErrorCode::kAsymmetricRotation,
                    "'" + names[u] + "' is around '" + names[v] + "' but not conversely");
      }
      if (v < u) g.graph_.add_edge(v, u);
    }
  }
  g.rotation_ = std::move(rotation);
  g.trace();
  return g;
}

int PlanarEmbedding::num_faces() const { return static_cast<int>(faces_.size()) + isolated_; }

int PlanarEmbedding::dart(int tail, int head) const {
  const auto& r = rotation_[tail];
  auto it = std::find(r.begin(), r.end(), head);
  if (it == r.end()) throw Error(ErrorCode::kEdgeNotInGraph, graph_.name(tail) + "-" + graph_.name(head));
  return offset_[tail] + static_cast<int>(it - r.begin());
}

void PlanarEmbedding::trace() {
  const int n = num_vertices();
  offset_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + static_cast<int>(rotation_[v].size());
  const int m = offset_[n];
  dart_tail_.resize(m);
  dart_head_.resize(m);
  twin_.resize(m);
  next_.resize(m);
  // position of each neighbour inside a rotation, for O(1) twin lookup
  std::vector<std::unordered_map<int, int>> pos(n);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i) {
      pos[v][rotation_[v][i]] = i;
      dart_tail_[offset_[v] + i] = v;
      dart_head_[offset_[v] + i] = rotation_[v][i];
    }
  }
  edges_ = graph_.edges();
  edge_of_dart_.assign(m, -1);
  for (int d = 0; d < m; ++d) {
    const int a = dart_tail_[d], b = dart_head_[d];
    twin_[d] = offset_[b] + pos[b][a];
    // arriving at b from a, leave along the predecessor of a around b
    const int deg = static_cast<int>(rotation_[b].size());
    next_[d] = offset_[b] + (pos[b][a] + deg - 1) % deg;
    const Edge key{std::min(a, b), std::max(a, b)};
    edge_of_dart_[d] = static_cast<int>(std::lower_bound(edges_.begin(), edges_.end(), key) - edges_.begin());
  }

  face_of_dart_.assign(m, -1);
  faces_.clear();
  for (int d0 = 0; d0 < m; ++d0) {
    if (face_of_dart_[d0] >= 0) continue;
    Face f;
    const int id = static_cast<int>(faces_.size());
    for (int d = d0; face_of_dart_[d] < 0; d = next_[d]) {
      face_of_dart_[d] = id;
      f.darts.push_back(d);
      f.vertices.push_back(dart_tail_[d]);
    }
    faces_.push_back(std::move(f));
  }

  // Euler per component: v - e + f = 2, isolated vertices count one face.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : rotation_[v]) {
        if (comp[u] < 0) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
      }
    }
    ++ncomp;
  }
  std::vector<long> vc(ncomp, 0), ec(ncomp, 0), fc(ncomp, 0);
  isolated_ = 0;
  for (int v = 0; v < n; ++v) {
    ++vc[comp[v]];
    ec[comp[v]] += static_cast<long>(rotation_[v].size());
    if (rotation_[v].empty()) {
      ++fc[comp[v]];
      ++isolated_;
    }
  }
  for (const auto& f : faces_) ++fc[comp[f.vertices.front()]];
  for (int c = 0; c < ncomp; ++c) {
    const long chi = vc[c] - ec[c] / 2 + fc[c];
    if (chi != 2) {
      throw Error(ErrorCode::kNonPlanarRotation,
                  "component has v - e + f = " + std::to_string(chi) + " instead of 2");
    }
  }
}

PlanarEmbedding mirrored(const PlanarEmbedding& g) {
  auto rot = g.rotations();
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return PlanarEmbedding::from_rotation(g.graph().names(), std::move(rot));
}

}  // namespace planturan

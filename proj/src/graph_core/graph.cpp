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

#include "planturan/graph.hpp"

#include <algorithm>
#include <numeric>

#include "planturan/error.hpp"

namespace planturan {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAsymmetricRotation: return "AsymmetricRotation";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateNeighbor: return "DuplicateNeighbor";
    case ErrorCode::kNonPlanarRotation: return "NonPlanarRotation";
    case ErrorCode::kNonPlanarGraph: return "NonPlanarGraph";
    case ErrorCode::kCeilingExceeded: return "CeilingExceeded";
    case ErrorCode::kKTooSmall: return "KTooSmall";
    case ErrorCode::kEdgeNotInGraph: return "EdgeNotInGraph";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kUnknownBlockShape: return "UnknownBlockShape";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kThetaFound: return "ThetaFound";
    case ErrorCode::kSharedBadBlock: return "SharedBadBlock";
    case ErrorCode::kInvalidTk: return "InvalidTk";
    case ErrorCode::kBoundViolated: return "BoundViolated";
    case ErrorCode::kUnknownFormat: return "UnknownFormat";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Error";
}

Graph::Graph(int n) {
  for (int i = 0; i < n; ++i) add_vertex(std::to_string(i));
}

Graph::Graph(std::vector<std::string> names) {
  for (auto& s : names) add_vertex(s);
}

int Graph::add_vertex(const std::string& name) {
  auto [it, inserted] = index_.emplace(name, num_vertices());
  if (!inserted) throw Error(ErrorCode::kParseError, "vertex '" + name + "' listed twice");
  names_.push_back(name);
  adj_.emplace_back();
  return it->second;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw Error(ErrorCode::kSelfLoop, "loop at '" + names_[u] + "'");
  auto& a = adj_[u];
  auto pos = std::lower_bound(a.begin(), a.end(), v);
  if (pos != a.end() && *pos == v) {
    throw Error(ErrorCode::kDuplicateNeighbor, "edge " + names_[u] + "-" + names_[v] + " repeated");
  }
  a.insert(pos, v);
  auto& b = adj_[v];
  b.insert(std::lower_bound(b.begin(), b.end(), u), u);
  ++num_edges_;
}

void Graph::add_edge(const std::string& u, const std::string& v) { add_edge(index_of(u), index_of(v)); }

bool Graph::has_edge(int u, int v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error(ErrorCode::kUnknownVertex, "no vertex '" + name + "'");
  return it->second;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (int u = 0; u < num_vertices(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::without_edge(int u, int v) const {
  if (!has_edge(u, v)) throw Error(ErrorCode::kEdgeNotInGraph, names_[u] + "-" + names_[v]);
  Graph g(names_);
  for (auto [a, b] : edges()) {
    if (!((a == u && b == v) || (a == v && b == u))) g.add_edge(a, b);
  }
  return g;
}

Graph Graph::without_vertex(int v) const {
  std::vector<std::string> keep;
  for (int i = 0; i < num_vertices(); ++i) {
    if (i != v) keep.push_back(names_[i]);
  }
  Graph g(keep);
  for (auto [a, b] : edges()) {
    if (a != v && b != v) g.add_edge(a - (a > v), b - (b > v));
  }
  return g;
}

int min_degree(const Graph& g) {
  if (g.num_vertices() == 0) return 0;
  int d = g.degree(0);
  for (int v = 1; v < g.num_vertices(); ++v) d = std::min(d, g.degree(v));
  return d;
}

int count_components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = n;
  for (auto [u, v] : g.edges()) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

bool is_connected(const Graph& g) { return count_components(g) <= 1; }

}  // namespace planturan

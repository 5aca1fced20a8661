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

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace planturan {

using Edge = std::pair<int, int>;

// Simple undirected graph over vertices 0..n-1, each carrying an opaque
// string identifier. Neighbour lists are kept sorted so iteration order is
// the input vertex order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  explicit Graph(std::vector<std::string> names);

  int add_vertex(const std::string& name);
  // Throws kSelfLoop / kDuplicateNeighbor.
  void add_edge(int u, int v);
  void add_edge(const std::string& u, const std::string& v);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return num_edges_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;

  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  bool has_vertex(const std::string& name) const { return index_.count(name) > 0; }
  // Throws kUnknownVertex.
  int index_of(const std::string& name) const;

  // Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  Graph without_edge(int u, int v) const;
  // Subgraph induced by all vertices except v (ids preserved, indices shift).
  Graph without_vertex(int v) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> adj_;
  int num_edges_ = 0;
};

int min_degree(const Graph& g);
int count_components(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace planturan

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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "planturan/graph.hpp"

namespace planturan {

inline constexpr int kDefaultCanonicalCeiling = 10;
inline constexpr int kSmallGraphMax = 16;

// Adjacency bitmasks for graphs on at most 16 vertices. This is the working
// representation of the enumerator.
struct SmallGraph {
  int n = 0;
  std::array<uint16_t, kSmallGraphMax> adj{};

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  void add_edge(int u, int v) {
    adj[u] |= static_cast<uint16_t>(1u << v);
    adj[v] |= static_cast<uint16_t>(1u << u);
  }
  int degree(int v) const { return __builtin_popcount(adj[v]); }
  int num_edges() const;
  std::vector<Edge> edges() const;
  Graph to_graph() const;  // vertex ids "0".."n-1"
  static SmallGraph from_graph(const Graph& g);
  bool operator==(const SmallGraph& o) const { return n == o.n && adj == o.adj; }
};

// Byte string: n, then the upper-triangle adjacency bits under the canonical
// labelling. Equal codes iff isomorphic. Throws kCeilingExceeded when
// v(G) > ceiling (the ceiling itself may not exceed 16).
std::string canonical_code(const Graph& g, int ceiling = kDefaultCanonicalCeiling);
std::string canonical_code(const SmallGraph& g);

// labelling[i] is the original vertex placed at canonical position i.
std::vector<int> canonical_labeling(const SmallGraph& g);
SmallGraph relabel(const SmallGraph& g, const std::vector<int>& labeling);
SmallGraph canonical_form(const SmallGraph& g);
SmallGraph decode_canonical_code(const std::string& code);

std::string code_to_hex(const std::string& code);
std::string hex_to_code(const std::string& hex);  // throws kParseError

}  // namespace planturan

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

#include "planturan/canonical.hpp"

#include <algorithm>

#include "planturan/error.hpp"

namespace planturan {
namespace {

using Cells = std::vector<std::vector<int>>;

// 128 bits cover the upper triangle of a 16-vertex graph.
struct Bits {
  uint64_t hi = 0, lo = 0;
  bool operator<(const Bits& o) const { return hi != o.hi ? hi < o.hi : lo < o.lo; }
};

Bits leaf_bits(const SmallGraph& g, const Cells& cells) {
  Bits b;
  int k = 0;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j, ++k) {
      if (g.has_edge(cells[i][0], cells[j][0])) {
        if (k < 64) b.hi |= uint64_t{1} << (63 - k);
        else b.lo |= uint64_t{1} << (127 - k);
      }
    }
  }
  return b;
}

// Equitable refinement. Split pieces are ordered by neighbour count, so the
// result depends only on the graph and the incoming cell order.
void refine(const SmallGraph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t w = 0; w < cells.size() && !changed; ++w) {
      uint16_t wmask = 0;
      for (int v : cells[w]) wmask |= static_cast<uint16_t>(1u << v);
      for (size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() == 1) continue;
        std::vector<std::pair<int, int>> keyed;
        for (int v : cells[c]) keyed.emplace_back(__builtin_popcount(g.adj[v] & wmask), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        if (keyed.front().first == keyed.back().first) continue;
        Cells pieces;
        for (size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
          pieces.back().push_back(keyed[i].second);
        }
        cells.erase(cells.begin() + c);
        cells.insert(cells.begin() + c, pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

void search(const SmallGraph& g, Cells cells, bool& have, Bits& best, std::vector<int>& best_perm) {
  refine(g, cells);
  int target = -1;
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
    if (cells[i].size() > 1 && (target < 0 || cells[i].size() < cells[target].size())) target = i;
  }
  if (target < 0) {
    Bits b = leaf_bits(g, cells);
    if (!have || best < b) {
      have = true;
      best = b;
      best_perm.clear();
      for (const auto& c : cells) best_perm.push_back(c[0]);
    }
    return;
  }
  for (int v : cells[target]) {
    Cells next = cells;
    std::vector<int> rest;
    for (int u : cells[target]) {
      if (u != v) rest.push_back(u);
    }
    next[target] = {v};
    next.insert(next.begin() + target + 1, rest);
    search(g, std::move(next), have, best, best_perm);
  }
}

}  // namespace

int SmallGraph::num_edges() const {
  int s = 0;
  for (int v = 0; v < n; ++v) s += degree(v);
  return s / 2;
}

std::vector<Edge> SmallGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph SmallGraph::to_graph() const {
  Graph g(n);
  for (auto [u, v] : edges()) g.add_edge(u, v);
  return g;
}

SmallGraph SmallGraph::from_graph(const Graph& g) {
  if (g.num_vertices() > kSmallGraphMax) {
    throw Error(ErrorCode::kCeilingExceeded, std::to_string(g.num_vertices()) + " vertices exceed 16");
  }
  SmallGraph s;
  s.n = g.num_vertices();
  for (auto [u, v] : g.edges()) s.add_edge(u, v);
  return s;
}

std::vector<int> canonical_labeling(const SmallGraph& g) {
  if (g.n == 0) return {};
  // initial cells by degree, ascending
  Cells cells;
  std::vector<int> order(g.n);
  for (int i = 0; i < g.n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
  for (int i = 0; i < g.n; ++i) {
    if (i == 0 || g.degree(order[i]) != g.degree(order[i - 1])) cells.emplace_back();
    cells.back().push_back(order[i]);
  }
  bool have = false;
  Bits best;
  std::vector<int> perm;
  search(g, cells, have, best, perm);
  return perm;
}

SmallGraph relabel(const SmallGraph& g, const std::vector<int>& labeling) {
  std::vector<int> pos(g.n);
  for (int i = 0; i < g.n; ++i) pos[labeling[i]] = i;
  SmallGraph out;
  out.n = g.n;
  for (auto [u, v] : g.edges()) out.add_edge(pos[u], pos[v]);
  return out;
}

SmallGraph canonical_form(const SmallGraph& g) { return relabel(g, canonical_labeling(g)); }

std::string canonical_code(const SmallGraph& g) {
  SmallGraph c = canonical_form(g);
  std::string code(1, static_cast<char>(g.n));
  const int bits = g.n * (g.n - 1) / 2;
  code.append((bits + 7) / 8, '\0');
  int k = 0;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j, ++k) {
      if (c.has_edge(i, j)) code[1 + k / 8] = static_cast<char>(code[1 + k / 8] | (0x80 >> (k % 8)));
    }
  }
  return code;
}

std::string canonical_code(const Graph& g, int ceiling) {
  if (g.num_vertices() > ceiling || g.num_vertices() > kSmallGraphMax) {
    throw Error(ErrorCode::kCeilingExceeded,
                std::to_string(g.num_vertices()) + " vertices exceed ceiling " + std::to_string(ceiling));
  }
  return canonical_code(SmallGraph::from_graph(g));
}

SmallGraph decode_canonical_code(const std::string& code) {
  if (code.empty()) throw Error(ErrorCode::kParseError, "empty canonical code");
  SmallGraph g;
  g.n = static_cast<unsigned char>(code[0]);
  const int bits = g.n * (g.n - 1) / 2;
  if (g.n > kSmallGraphMax || static_cast<int>(code.size()) != 1 + (bits + 7) / 8) {
    throw Error(ErrorCode::kParseError, "malformed canonical code");
  }
  int k = 0;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j, ++k) {
      if (static_cast<unsigned char>(code[1 + k / 8]) & (0x80 >> (k % 8))) g.add_edge(i, j);
    }
  }
  return g;
}

std::string code_to_hex(const std::string& code) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : code) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

std::string hex_to_code(const std::string& hex) {
  auto val = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw Error(ErrorCode::kParseError, "bad hex digit");
  };
  if (hex.size() % 2) throw Error(ErrorCode::kParseError, "odd hex length");
  std::string out;
  for (size_t i = 0; i < hex.size(); i += 2) out += static_cast<char>(val(hex[i]) * 16 + val(hex[i + 1]));
  return out;
}

}  // namespace planturan

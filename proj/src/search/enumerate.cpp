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

#include <algorithm>
#include <atomic>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <omp.h>

#include "planturan/blocks.hpp"
#include "planturan/error.hpp"
#include "planturan/search.hpp"

namespace planturan {
namespace {

using Clock = std::chrono::steady_clock;
using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                         boost::property<boost::edge_index_t, int>>;

void check_ceiling(int n) {
  if (n < 1 || n > kSearchCeiling) {
    throw Error(ErrorCode::kCeilingExceeded,
                "n = " + std::to_string(n) + " is outside the exact range 1.." + std::to_string(kSearchCeiling));
  }
}

// Most edges vertices m+1..n can add on top of an m-vertex prefix.
int future_edges(int m, int n) {
  int s = 0;
  for (int j = m + 1; j <= n; ++j) s += j - 1;
  return s;
}

bool admissible(const SmallGraph& g, const EnumerateOptions& opts) {
  if (!is_planar(g)) return false;
  return !opts.forbidden || !contains_family(g.to_graph(), *opts.forbidden);
}

// Codes of the admissible one-vertex extensions of parents[i] with at least
// min_edges edges, written to `out`. Candidates already in `seen` are skipped.
void extend(const SmallGraph& p, int min_edges, const EnumerateOptions& opts, std::set<std::string>& seen,
            std::set<std::string>& out) {
  const int m = p.n + 1;
  const int pe = p.num_edges();
  const int cap = m >= 3 ? 3 * m - 6 : m * (m - 1) / 2;
  for (uint32_t s = 1; s < (1u << p.n); ++s) {
    const int e = pe + __builtin_popcount(s);
    if (e > cap || e < min_edges) continue;
    SmallGraph c = p;
    c.n = m;
    for (int u = 0; u < p.n; ++u) {
      if ((s >> u) & 1u) c.add_edge(u, m - 1);
    }
    std::string code = canonical_code(c);
    if (!seen.insert(code).second) continue;
    if (admissible(c, opts)) out.insert(std::move(code));
  }
}

std::vector<SmallGraph> run(int n, const EnumerateOptions& opts, bool parallel) {
  check_ceiling(n);
  const auto deadline = opts.budget ? std::optional(Clock::now() + *opts.budget) : std::nullopt;
  SmallGraph k1;
  k1.n = 1;
  std::vector<SmallGraph> level;
  if (opts.edge_floor - future_edges(1, n) <= 0) level.push_back(k1);
  for (int m = 2; m <= n && !level.empty(); ++m) {
    const int min_edges = opts.edge_floor - future_edges(m, n);
    std::set<std::string> merged;
    std::atomic<bool> late{false};
    const int count = static_cast<int>(level.size());
    if (parallel) {
      const int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
      {
        std::set<std::string> seen, found;
#pragma omp for schedule(dynamic, 4)
        for (int i = 0; i < count; ++i) {
          if (late.load(std::memory_order_relaxed)) continue;
          if (deadline && Clock::now() > *deadline) late = true;
          extend(level[i], min_edges, opts, seen, found);
        }
#pragma omp critical(planturan_enumerate_merge)
        merged.insert(found.begin(), found.end());
      }
    } else {
      std::set<std::string> seen;
      for (int i = 0; i < count; ++i) {
        if (deadline && Clock::now() > *deadline) {
          late = true;
          break;
        }
        extend(level[i], min_edges, opts, seen, merged);
      }
    }
    if (late) throw Error(ErrorCode::kCeilingExceeded, "time budget exhausted at level " + std::to_string(m));
    level.clear();
    level.reserve(merged.size());
    for (const auto& code : merged) level.push_back(decode_canonical_code(code));
  }
  return level;
}

}  // namespace

bool is_planar(const SmallGraph& g) {
  const int e = g.num_edges();
  if (g.n >= 3 && e > 3 * g.n - 6) return false;
  if (g.n <= 4 || e <= 8) return true;  // K5 and K3,3 need 9 edges
  BoostGraph bg(g.n);
  int idx = 0;
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, idx++, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool is_connected(const SmallGraph& g) {
  if (g.n == 0) return true;
  uint32_t seen = 1, frontier = 1;
  while (frontier) {
    uint32_t next = 0;
    for (int v = 0; v < g.n; ++v) {
      if ((frontier >> v) & 1u) next |= g.adj[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << g.n) - 1;
}

int count_bc_blocks(const SmallGraph& g) { return block_cut_forest(g.to_graph()).num_blocks(); }

std::vector<SmallGraph> enumerate_planar(int n, const EnumerateOptions& opts) { return run(n, opts, true); }

std::vector<SmallGraph> enumerate_planar_serial(int n, const EnumerateOptions& opts) {
  return run(n, opts, false);
}

SmallGraph random_planar_graph(std::mt19937_64& rng, int n, double density) {
  if (n < 0 || n > kSmallGraphMax) throw Error(ErrorCode::kCeilingExceeded, "random graphs are limited to 16 vertices");
  SmallGraph g;
  g.n = n;
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution keep(density);
  for (auto [u, v] : pairs) {
    if (!keep(rng)) continue;
    SmallGraph h = g;
    h.add_edge(u, v);
    if (is_planar(h)) g = h;
  }
  return g;
}

}  // namespace planturan

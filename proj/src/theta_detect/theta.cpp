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

#include "planturan/theta.hpp"

#include <algorithm>
#include <regex>

#include "planturan/error.hpp"

namespace planturan {
namespace {

int cycle_distance(int i, int j, int k) {
  int d = std::abs(i - j);
  return std::min(d, k - d);
}

// Least chord of a closed cycle with an allowed distance, if any.
std::optional<ThetaWitness> best_chord(const Graph& g, const std::vector<int>& cyc, std::optional<int> variant) {
  const int k = static_cast<int>(cyc.size());
  std::optional<ThetaWitness> best;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 2; j < k; ++j) {
      const int d = cycle_distance(i, j, k);
      if (d < 2 || (variant && d != *variant)) continue;
      if (!g.has_edge(cyc[i], cyc[j])) continue;
      Edge c{std::min(cyc[i], cyc[j]), std::max(cyc[i], cyc[j])};
      if (!best || c < best->chord) best = ThetaWitness{cyc, c, d};
    }
  }
  return best;
}

// DFS over simple paths from s through vertices > s. Neighbours ascend, so
// closed cycles appear in lexicographic order and the first accepted one is
// the least.
template <typename Accept>
bool cycle_dfs(const Graph& g, int k, int s, std::vector<int>& path, std::vector<char>& on, Accept&& accept) {
  const int v = path.back();
  if (static_cast<int>(path.size()) == k) {
    if (path[1] < path.back() && g.has_edge(v, s)) return accept(path);
    return false;
  }
  for (int u : g.neighbors(v)) {
    if (u <= s || on[u]) continue;
    path.push_back(u);
    on[u] = 1;
    bool done = cycle_dfs(g, k, s, path, on, accept);
    path.pop_back();
    on[u] = 0;
    if (done) return true;
  }
  return false;
}

template <typename Accept>
void for_each_cycle(const Graph& g, int k, Accept&& accept) {
  const int n = g.num_vertices();
  if (k < 3 || k > n) return;
  std::vector<char> on(n, 0);
  std::vector<int> path;
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    on[s] = 1;
    bool done = cycle_dfs(g, k, s, path, on, accept);
    on[s] = 0;
    if (done) return;
  }
}

}  // namespace

std::string Family::name() const {
  if (kind == Kind::kCycle) return "c" + std::to_string(k);
  std::string base = "theta" + std::to_string(k);
  if (!variant) return base;
  if (k == 6 && *variant == 3) return base + "-sym";
  if (k == 6 && *variant == 2) return base + "-asym";
  return base + "-d" + std::to_string(*variant);
}

Family Family::parse(const std::string& text) {
  static const std::regex re(R"((theta|c)(\d+)(?:-(sym|asym|d(\d+)))?)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw Error(ErrorCode::kParseError, "unknown family '" + text + "'");
  Family f;
  f.kind = m[1] == "c" ? Kind::kCycle : Kind::kTheta;
  f.k = std::stoi(m[2]);
  if (f.kind == Kind::kCycle) {
    if (m[3].matched) throw Error(ErrorCode::kParseError, "cycles take no variant");
    if (f.k < 3) throw Error(ErrorCode::kKTooSmall, "cycle length must be at least 3");
    return f;
  }
  theta_family_size(f.k);
  if (m[3].matched) {
    if (m[3] == "sym" || m[3] == "asym") {
      if (f.k != 6) throw Error(ErrorCode::kParseError, "sym/asym only name Theta6 variants");
      f.variant = m[3] == "sym" ? 3 : 2;
    } else {
      f.variant = std::stoi(m[4]);
      if (*f.variant < 2 || *f.variant > f.k / 2) throw Error(ErrorCode::kParseError, "chord distance out of range");
    }
  }
  return f;
}

int theta_family_size(int k) {
  if (k < 4) throw Error(ErrorCode::kKTooSmall, "Theta graphs need k >= 4, got " + std::to_string(k));
  return k / 2 - 1;
}

std::optional<std::vector<int>> find_cycle(const Graph& g, int k) {
  std::optional<std::vector<int>> out;
  for_each_cycle(g, k, [&](const std::vector<int>& c) {
    out = c;
    return true;
  });
  return out;
}

std::optional<ThetaWitness> find_theta(const Graph& g, int k, std::optional<int> variant) {
  theta_family_size(k);
  std::optional<ThetaWitness> out;
  for_each_cycle(g, k, [&](const std::vector<int>& c) {
    out = best_chord(g, c, variant);
    return out.has_value();
  });
  return out;
}

std::optional<ThetaWitness> brute_force_theta(const Graph& g, int k, std::optional<int> variant) {
  theta_family_size(k);
  const int n = g.num_vertices();
  std::optional<ThetaWitness> best;
  if (k > n) return best;
  std::vector<char> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  do {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i) {
      if (pick[i]) subset.push_back(i);
    }
    std::vector<int> rest(subset.begin() + 1, subset.end());
    do {
      if (rest.front() > rest.back()) continue;
      std::vector<int> cyc{subset[0]};
      cyc.insert(cyc.end(), rest.begin(), rest.end());
      bool closed = true;
      for (int i = 0; i < k && closed; ++i) closed = g.has_edge(cyc[i], cyc[(i + 1) % k]);
      if (!closed) continue;
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          if (i >= j) continue;
          const int d = cycle_distance(i, j, k);
          if (d < 2 || (variant && d != *variant) || !g.has_edge(cyc[i], cyc[j])) continue;
          ThetaWitness w{cyc, {std::min(cyc[i], cyc[j]), std::max(cyc[i], cyc[j])}, d};
          if (!best || w.cycle < best->cycle || (w.cycle == best->cycle && w.chord < best->chord)) best = w;
        }
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

std::string validate_witness(const Graph& g, const ThetaWitness& w, int k) {
  if (static_cast<int>(w.cycle.size()) != k) return "cycle length differs from k";
  std::vector<int> sorted = w.cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "repeated cycle vertex";
  for (int v : w.cycle) {
    if (v < 0 || v >= g.num_vertices()) return "vertex out of range";
  }
  for (int i = 0; i < k; ++i) {
    if (!g.has_edge(w.cycle[i], w.cycle[(i + 1) % k])) return "missing cycle edge";
  }
  auto a = std::find(w.cycle.begin(), w.cycle.end(), w.chord.first);
  auto b = std::find(w.cycle.begin(), w.cycle.end(), w.chord.second);
  if (a == w.cycle.end() || b == w.cycle.end()) return "chord endpoint off the cycle";
  if (!g.has_edge(w.chord.first, w.chord.second)) return "chord is not an edge";
  const int d = cycle_distance(static_cast<int>(a - w.cycle.begin()), static_cast<int>(b - w.cycle.begin()), k);
  if (d < 2) return "chord joins consecutive vertices";
  if (d != w.variant) return "variant does not match chord distance";
  return "";
}

bool contains_family(const Graph& g, const Family& f) {
  if (f.kind == Family::Kind::kCycle) return find_cycle(g, f.k).has_value();
  return find_theta(g, f.k, f.variant).has_value();
}

}  // namespace planturan

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

#include "planturan/search.hpp"

#include <algorithm>
#include <set>

#include "planturan/blocks.hpp"
#include "planturan/error.hpp"

namespace planturan {
namespace {

using Clock = std::chrono::steady_clock;

int planar_cap(int n) { return n >= 3 ? 3 * n - 6 : n * (n - 1) / 2; }

int floor_div7(int x) { return x >= 0 ? x / 7 : -((-x + 6) / 7); }

std::optional<std::chrono::seconds> remaining(std::optional<Clock::time_point> deadline) {
  if (!deadline) return std::nullopt;
  auto left = std::chrono::duration_cast<std::chrono::seconds>(*deadline - Clock::now());
  if (left.count() <= 0) throw Error(ErrorCode::kCeilingExceeded, "time budget exhausted");
  return left;
}

std::string hex_of(const SmallGraph& g) { return code_to_hex(canonical_code(g)); }

SmallGraph without_vertex(const SmallGraph& g, int v) {
  SmallGraph h;
  h.n = g.n - 1;
  auto shift = [v](int x) { return x < v ? x : x - 1; };
  for (auto [a, b] : g.edges()) {
    if (a != v && b != v) h.add_edge(shift(a), shift(b));
  }
  return h;
}

SmallGraph graph_from_edges(int n, const Json& edges) {
  SmallGraph g;
  g.n = n;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::kParseError, "edge must be a pair");
    auto id = [n](const Json& x) {
      int v = x.is_string() ? std::stoi(x.get<std::string>()) : x.get<int>();
      if (v < 0 || v >= n) throw Error(ErrorCode::kParseError, "edge endpoint out of range");
      return v;
    };
    int a = id(e.at(0)), b = id(e.at(1));
    if (a == b || g.has_edge(a, b)) throw Error(ErrorCode::kParseError, "loop or repeated edge in witness");
    g.add_edge(a, b);
  }
  return g;
}

bool family_free_oracle(const SmallGraph& g, const Family& f) {
  const Graph h = g.to_graph();
  if (f.kind == Family::Kind::kTheta) return !brute_force_theta(h, f.k, f.variant);
  return !find_cycle(h, f.k);
}

}  // namespace

std::chrono::seconds default_budget(int n) {
  using std::chrono::seconds;
  if (n <= 6) return seconds(60);
  if (n == 7) return seconds(600);
  return seconds(7200);
}

std::optional<int> SearchCertificate::max_edges_2_connected() const {
  auto it = strata.find(1);
  if (n < 2 || it == strata.end() || it->second.count == 0) return std::nullopt;
  return it->second.max_edges;
}

SearchCertificate ex_planar(int n, const Family& family, const SearchOptions& opts) {
  if (n < 1 || n > kSearchCeiling) {
    throw Error(ErrorCode::kCeilingExceeded,
                "n = " + std::to_string(n) + " is outside the exact range 1.." + std::to_string(kSearchCeiling));
  }
  const auto start = Clock::now();
  const auto budget = opts.budget ? *opts.budget : default_budget(n);
  const std::optional<Clock::time_point> deadline = start + budget;
  SearchCertificate c;
  c.n = n;
  c.family = family;
  for (int floor = planar_cap(n); floor >= 0; --floor) {
    EnumerateOptions eo{floor, family, opts.jobs, remaining(deadline)};
    auto found = enumerate_planar(n, eo);
    c.graphs_enumerated += static_cast<long>(found.size());
    c.floors_scanned.push_back(floor);
    if (found.empty()) continue;
    for (const auto& g : found) c.max_edges = std::max(c.max_edges, g.num_edges());
    for (auto& g : found) {
      if (g.num_edges() == c.max_edges) c.witnesses.push_back(std::move(g));
    }
    break;
  }
  if (opts.with_strata) {
    EnumerateOptions eo{0, family, opts.jobs, remaining(deadline)};
    for (const auto& g : enumerate_planar(n, eo)) {
      const int b = count_bc_blocks(g);
      Stratum& s = c.strata[b];
      s.blocks = b;
      ++s.count;
      const std::string code = hex_of(g);
      if (g.num_edges() > s.max_edges || (g.num_edges() == s.max_edges && code < s.witness)) {
        s.max_edges = g.num_edges();
        s.witness = code;
      }
    }
  }
  c.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return c;
}

int two_connected_bound(int n) {
  const int c = n == 6 ? 38 : n == 7 ? 42 : n == 8 ? 46 : 48;
  return floor_div7(18 * n - c);
}

int general_bound(int n) { return floor_div7(18 * n - 27); }

int block_count_bound(int n, int blocks) { return floor_div7(18 * n - 9 * blocks - 18); }

bool BoundReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.ok(); });
}

BoundReport check_bound_table(const std::vector<SearchCertificate>& certs) {
  BoundReport r;
  for (const auto& c : certs) {
    if (c.strata.empty()) throw Error(ErrorCode::kParseError, "certificate for n=" + std::to_string(c.n) + " has no strata");
    if (c.n >= 6 && c.n <= 8) {
      BoundRow row{c.n, "two_connected_table", "2-connected", two_connected_bound(c.n), -1, ""};
      if (auto it = c.strata.find(1); it != c.strata.end()) {
        row.observed = it->second.max_edges;
        row.witness = it->second.witness;
      }
      r.rows.push_back(row);
    }
    if (c.n == 6 || c.n == 7) {
      BoundRow row{c.n, "connected_table", "connected", two_connected_bound(c.n), c.max_edges, ""};
      if (!c.witnesses.empty()) row.witness = hex_of(c.witnesses.front());
      r.rows.push_back(row);
    }
    if (c.n >= 2) {
      BoundRow row{c.n, "general_bound", "connected", general_bound(c.n), c.max_edges, ""};
      if (!c.witnesses.empty()) row.witness = hex_of(c.witnesses.front());
      r.rows.push_back(row);
      for (const auto& [b, s] : c.strata) {
        r.rows.push_back({c.n, "block_count_bound", std::to_string(b) + " blocks", block_count_bound(c.n, b),
                          s.max_edges, s.witness});
      }
    }
  }
  return r;
}

std::vector<DegreeTwoRow> verify_degree_two_claims(int n, int jobs) {
  std::vector<DegreeTwoRow> rows = {{"three_blocks", 0, 0, ""}, {"two_blocks_one_large", 0, 0, ""}};
  EnumerateOptions eo;
  eo.forbidden = Family{Family::Kind::kTheta, 6, std::nullopt};
  eo.jobs = jobs;
  for (const auto& g : enumerate_planar(n, eo)) {
    const bool below = 7 * g.num_edges() < 18 * n - 48;
    for (int v = 0; v < g.n; ++v) {
      if (g.degree(v) != 2) continue;
      const BlockCutForest bc = block_cut_forest(without_vertex(g, v).to_graph());
      size_t largest = 0;
      for (const auto& b : bc.blocks) largest = std::max(largest, b.size());
      DegreeTwoRow* row = nullptr;
      if (bc.num_blocks() >= 3) row = &rows[0];
      if (bc.num_blocks() == 2 && largest >= 6) row = &rows[1];
      if (!row) continue;
      ++row->matching;
      if (!below) {
        ++row->violations;
        if (row->witness.empty()) row->witness = hex_of(g);
      }
    }
  }
  return rows;
}

Json small_graph_to_json(const SmallGraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({std::to_string(u), std::to_string(v)});
  return edges;
}

Json certificate_to_json(const SearchCertificate& c) {
  Json j;
  j["n"] = c.n;
  j["family"] = c.family.name();
  j["scope"] = "connected";
  j["max_edges"] = c.max_edges;
  j["witnesses"] = Json::array();
  for (const auto& w : c.witnesses) j["witnesses"].push_back({{"code", hex_of(w)}, {"edges", small_graph_to_json(w)}});
  j["graphs_enumerated"] = c.graphs_enumerated;
  j["floors_scanned"] = c.floors_scanned;
  j["strata"] = Json::array();
  for (const auto& [b, s] : c.strata) {
    j["strata"].push_back({{"blocks", b}, {"count", s.count}, {"max_edges", s.max_edges}, {"witness", s.witness}});
  }
  j["elapsed_seconds"] = c.elapsed_seconds;
  return j;
}

SearchCertificate certificate_from_json(const Json& j) {
  try {
    SearchCertificate c;
    c.n = j.at("n").get<int>();
    c.family = Family::parse(j.at("family").get<std::string>());
    c.max_edges = j.at("max_edges").get<int>();
    for (const auto& w : j.at("witnesses")) c.witnesses.push_back(graph_from_edges(c.n, w.at("edges")));
    c.graphs_enumerated = j.value("graphs_enumerated", 0L);
    if (j.contains("floors_scanned")) c.floors_scanned = j.at("floors_scanned").get<std::vector<int>>();
    if (j.contains("strata")) {
      for (const auto& s : j.at("strata")) {
        Stratum st{s.at("blocks").get<int>(), s.at("count").get<long>(), s.at("max_edges").get<int>(),
                   s.at("witness").get<std::string>()};
        c.strata[st.blocks] = st;
      }
    }
    c.elapsed_seconds = j.value("elapsed_seconds", 0.0);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("certificate: ") + e.what());
  }
}

VerifyReport verify_certificate(const Json& cert, int jobs) {
  VerifyReport r;
  auto fail = [&r](const std::string& msg) {
    r.ok = false;
    r.problems.push_back(msg);
  };
  const SearchCertificate c = certificate_from_json(cert);
  if (c.n < 1 || c.n > kSearchCeiling) throw Error(ErrorCode::kCeilingExceeded, "certificate n out of range");
  std::set<std::string> claimed;
  for (size_t i = 0; i < c.witnesses.size(); ++i) {
    const SmallGraph& w = c.witnesses[i];
    const std::string tag = "witness " + std::to_string(i);
    const std::string code = hex_of(w);
    claimed.insert(code);
    if (cert.at("witnesses")[i].value("code", std::string()) != code) fail(tag + ": code does not match edges");
    if (w.num_edges() != c.max_edges) fail(tag + ": edge count differs from max_edges");
    if (!is_planar(w)) fail(tag + ": not planar");
    if (!is_connected(w)) fail(tag + ": not connected");
    if (!family_free_oracle(w, c.family)) fail(tag + ": contains " + c.family.name());
  }
  SearchOptions opts;
  opts.jobs = jobs;
  opts.with_strata = !c.strata.empty();
  const SearchCertificate fresh = ex_planar(c.n, c.family, opts);
  if (fresh.max_edges != c.max_edges) {
    fail("max_edges " + std::to_string(c.max_edges) + " but recomputed " + std::to_string(fresh.max_edges));
  }
  std::set<std::string> actual;
  for (const auto& w : fresh.witnesses) actual.insert(hex_of(w));
  if (actual != claimed) fail("witness set differs from the recomputed extremal classes");
  if (opts.with_strata) {
    for (const auto& [b, s] : fresh.strata) {
      auto it = c.strata.find(b);
      if (it == c.strata.end() || it->second.count != s.count || it->second.max_edges != s.max_edges ||
          it->second.witness != s.witness) {
        fail("stratum with " + std::to_string(b) + " blocks differs");
      }
    }
    if (fresh.strata.size() != c.strata.size()) fail("stratum count differs");
  }
  return r;
}

}  // namespace planturan

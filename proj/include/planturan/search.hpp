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

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "planturan/canonical.hpp"
#include "planturan/io.hpp"
#include "planturan/theta.hpp"

namespace planturan {

// Exactness ceiling for enumeration-based certificates.
inline constexpr int kSearchCeiling = 8;

struct EnumerateOptions {
  int edge_floor = 0;
  // Keep only graphs free of this family (the property is subgraph-closed,
  // so it is applied at every generation level).
  std::optional<Family> forbidden;
  // OpenMP threads; 0 means the runtime default, 1 forces a single thread.
  int jobs = 0;
  // Wall-clock budget; exceeding it throws kCeilingExceeded.
  std::optional<std::chrono::seconds> budget;
};

// One representative per isomorphism class of connected planar graphs on n
// vertices with at least edge_floor edges, in canonical form, sorted by
// canonical code. Throws kCeilingExceeded for n outside 1..8.
std::vector<SmallGraph> enumerate_planar(int n, const EnumerateOptions& opts = {});
// Single-threaded reference implementation of the same enumeration.
std::vector<SmallGraph> enumerate_planar_serial(int n, const EnumerateOptions& opts = {});

bool is_planar(const SmallGraph& g);
bool is_connected(const SmallGraph& g);
int count_bc_blocks(const SmallGraph& g);

// Edge statistics for the graphs with a given number of BC blocks.
struct Stratum {
  int blocks = 0;
  long count = 0;
  int max_edges = -1;
  std::string witness;  // hex canonical code of the least extremal class
};

struct SearchCertificate {
  int n = 0;
  Family family;
  int max_edges = -1;
  std::vector<SmallGraph> witnesses;  // every extremal class, sorted by code
  long graphs_enumerated = 0;         // classes emitted across all scanned floors
  std::vector<int> floors_scanned;
  std::map<int, Stratum> strata;  // keyed by BC block count; full enumeration
  double elapsed_seconds = 0;

  std::optional<int> max_edges_2_connected() const;
};

struct SearchOptions {
  int jobs = 0;
  bool with_strata = true;
  std::optional<std::chrono::seconds> budget;
};

// Default wall-clock budgets: 1 min at n <= 6, 10 min at n = 7, 2 h at n = 8.
std::chrono::seconds default_budget(int n);

// Exact maximum edge count over connected planar graphs on n vertices free of
// the family. Scans edge floors downward from the planar maximum and stops at
// the first level that has a member. Throws kCeilingExceeded.
SearchCertificate ex_planar(int n, const Family& family, const SearchOptions& opts = {});

struct BoundRow {
  int n = 0;
  std::string name;
  std::string scope;
  int bound = 0;
  int observed = -1;  // -1 when the scope is empty
  std::string witness;
  bool ok() const { return observed <= bound; }
};

struct BoundReport {
  std::vector<BoundRow> rows;
  bool ok() const;
};

// floor((18 n - c) / 7) for the 2-connected table: c = 38, 42, 46 at n = 6, 7, 8
// and 48 beyond.
int two_connected_bound(int n);
// floor((18 n - 27) / 7) for any graph, floor((18 n - 9 b - 18) / 7) with b blocks.
int general_bound(int n);
int block_count_bound(int n, int blocks);

// Checks the small-n edge table on certificates with strata. The 2-connected
// table applies to n = 6, 7, 8; for n = 6 and 7 it also holds for every
// connected graph, which is checked as its own row.
BoundReport check_bound_table(const std::vector<SearchCertificate>& certs);

struct DegreeTwoRow {
  std::string hypothesis;  // "three_blocks" or "two_blocks_one_large"
  long matching = 0;       // (graph, vertex) pairs meeting the hypothesis
  long violations = 0;
  std::string witness;  // hex code of a violating graph, if any
};

// Over every Theta6-free connected planar graph on n vertices with a vertex v
// of degree 2: if G - v has >= 3 blocks, or exactly 2 blocks one of which has
// >= 6 vertices, then 7 e(G) < 18 n - 48.
std::vector<DegreeTwoRow> verify_degree_two_claims(int n, int jobs = 0);

// Random planar graph: edges of K_n tried in random order with probability
// `density`, each kept only while the graph stays planar.
SmallGraph random_planar_graph(std::mt19937_64& rng, int n, double density);

// Exhaustive per-graph checks over the enumeration. Every family-free class
// on 1..max_n vertices is embedded and decomposed; the ones meeting the
// standing hypothesis are audited. The Theta6 detector is compared with the
// brute-force oracle on every class and on random planar graphs with up to
// ten vertices.
struct SweepOptions {
  int random_samples = 0;
  uint64_t seed = 1;
  int jobs = 0;
};

struct SweepReport {
  int max_n = 0;
  long free_graphs = 0;
  long hosts = 0;  // classes meeting the standing hypothesis
  long host_failures = 0;
  std::string host_failure_witness;
  int largest_block = 0;
  std::string largest_block_witness;
  long oracle_enumerated = 0;
  long oracle_random = 0;
  long oracle_mismatches = 0;
  std::string oracle_mismatch_witness;

  bool ok() const { return host_failures == 0 && largest_block <= 5 && oracle_mismatches == 0; }
};

SweepReport sweep(int max_n, const Family& family, const SweepOptions& opts = {});
Json sweep_to_json(const SweepReport& r);

Json certificate_to_json(const SearchCertificate& c);
SearchCertificate certificate_from_json(const Json& j);  // throws kParseError

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> problems;
};

// Re-checks each witness from its edge list and code, then recomputes the
// maximum from scratch and compares.
VerifyReport verify_certificate(const Json& cert, int jobs = 0);

Json small_graph_to_json(const SmallGraph& g);

}  // namespace planturan

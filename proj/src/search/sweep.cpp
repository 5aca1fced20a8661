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

#include "planturan/blocks.hpp"
#include "planturan/discharge.hpp"
#include "planturan/planarity.hpp"
#include "planturan/search.hpp"

namespace planturan {

SweepReport sweep(int max_n, const Family& family, const SweepOptions& opts) {
  SweepReport r;
  r.max_n = max_n;
  EnumerateOptions eo;
  eo.jobs = opts.jobs;
  for (int n = 1; n <= max_n; ++n) {
    for (const SmallGraph& s : enumerate_planar(n, eo)) {
      const Graph g = s.to_graph();
      ++r.oracle_enumerated;
      if (find_theta(g, 6) != brute_force_theta(g, 6) && r.oracle_mismatches++ == 0) {
        r.oracle_mismatch_witness = code_to_hex(canonical_code(s));
      }
      if (contains_family(g, family)) continue;
      ++r.free_graphs;

      const PlanarEmbedding emb = planarity_embed(g);
      const Decomposition d = decompose(emb);
      for (const auto& b : d.blocks) {
        if (b.num_vertices() > r.largest_block) {
          r.largest_block = b.num_vertices();
          r.largest_block_witness = code_to_hex(canonical_code(s));
        }
      }
      if (!is_2_connected(emb) || min_degree(emb) < 3 || d.blocks.size() < 2) continue;
      ++r.hosts;
      bool passed = false;
      try {
        passed = audit_known_free(emb, d).passed();
      } catch (const Error&) {
      }
      if (!passed && r.host_failures++ == 0) r.host_failure_witness = code_to_hex(canonical_code(s));
    }
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> size(1, 10);
  std::uniform_real_distribution<double> density(0.05, 0.95);
  for (; r.oracle_random < opts.random_samples; ++r.oracle_random) {
    const SmallGraph s = random_planar_graph(rng, size(rng), density(rng));
    const Graph g = s.to_graph();
    if (find_theta(g, 6) != brute_force_theta(g, 6) && r.oracle_mismatches++ == 0) {
      r.oracle_mismatch_witness = code_to_hex(canonical_code(s));
    }
  }
  return r;
}

Json sweep_to_json(const SweepReport& r) {
  return Json{{"max_n", r.max_n},
              {"free_graphs", r.free_graphs},
              {"hosts", r.hosts},
              {"host_failures", r.host_failures},
              {"host_failure_witness", r.host_failure_witness},
              {"largest_block", r.largest_block},
              {"largest_block_witness", r.largest_block_witness},
              {"oracle_enumerated", r.oracle_enumerated},
              {"oracle_random", r.oracle_random},
              {"oracle_mismatches", r.oracle_mismatches},
              {"oracle_mismatch_witness", r.oracle_mismatch_witness},
              {"ok", r.ok()}};
}

}  // namespace planturan

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

#include <vector>

#include "planturan/embedding.hpp"
#include "planturan/graph.hpp"

namespace planturan {

// Biconnected components (bridges count as blocks, isolated vertices as
// singleton blocks) and the cut vertices joining them.
struct BlockCutForest {
  std::vector<std::vector<int>> blocks;        // sorted vertex sets
  std::vector<std::vector<Edge>> block_edges;  // edges of each block
  std::vector<int> cut_vertices;               // sorted
  // incidence[i] lists the cut vertices lying in blocks[i]
  std::vector<std::vector<int>> incidence;

  int num_blocks() const { return static_cast<int>(blocks.size()); }
};

BlockCutForest block_cut_forest(const Graph& g);
inline BlockCutForest block_cut_forest(const PlanarEmbedding& g) { return block_cut_forest(g.graph()); }

// True for graphs on >= 2 vertices that are connected with no cut vertex.
// K2 counts as 2-connected here, matching the block definition.
bool is_2_connected(const Graph& g);
inline bool is_2_connected(const PlanarEmbedding& g) { return is_2_connected(g.graph()); }
inline int min_degree(const PlanarEmbedding& g) { return min_degree(g.graph()); }

}  // namespace planturan

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

#include <optional>
#include <string>
#include <vector>

#include "planturan/embedding.hpp"
#include "planturan/rational.hpp"

namespace planturan {

enum class BlockKind { kB2, kB3, kB4a, kB4b, kB5a, kB5b, kB5c, kB5d };

std::string kind_name(BlockKind k);
// Number of 3-faces of the template drawing, used to flag nesting.
int template_face_count(BlockKind k);

// Maximal set of edges closed under absorbing the edges of incident 3-faces.
struct TriangularBlock {
  std::vector<int> edges;     // edge ids of the embedding, sorted
  std::vector<int> vertices;  // sorted
  std::optional<BlockKind> kind;  // empty when no template matches
  // 3-faces of the host whose edges lie in this block
  int triangular_face_count = 0;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  bool face_count_matches_template() const {
    return kind && triangular_face_count == template_face_count(*kind);
  }
};

struct Decomposition {
  std::vector<TriangularBlock> blocks;
  std::vector<int> block_of_edge;  // edge id -> block index
  std::vector<int> block_count;    // vertex -> number of blocks containing it

  bool is_junction(int v) const { return block_count[v] >= 2; }
  int block_of(const PlanarEmbedding& g, int u, int v) const { return block_of_edge[g.edge_id(u, v)]; }
};

// Throws kEdgeNotInGraph.
TriangularBlock triangular_block_of(const PlanarEmbedding& g, Edge e);
// Blocks are numbered by their smallest edge id.
Decomposition decompose(const PlanarEmbedding& g);

// Isomorphism match of a block's edge set against the stored templates.
// Throws kUnknownBlockShape (in particular for blocks on >= 6 vertices).
BlockKind classify(const Graph& block);
BlockKind classify(const PlanarEmbedding& g, const std::vector<int>& edge_ids);
// Subgraph spanned by a set of edge ids, keeping host vertex names.
Graph edge_subgraph(const PlanarEmbedding& g, const std::vector<int>& edge_ids);

}  // namespace planturan

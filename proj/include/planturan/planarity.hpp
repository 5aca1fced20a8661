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
#include <string>
#include <vector>

#include "planturan/embedding.hpp"
#include "planturan/graph.hpp"

namespace planturan {

bool is_planar(const Graph& g);

// Some valid rotation system for a planar abstract graph; the result is a
// deterministic function of the vertex and edge order of g.
// Throws kNonPlanarGraph.
PlanarEmbedding planarity_embed(const Graph& g);

// Rotation read off a straight-line drawing: neighbours sorted by angle.
// The caller guarantees the drawing has no crossings; Euler is still checked.
PlanarEmbedding embedding_from_coordinates(const Graph& g, const std::vector<std::array<double, 2>>& xy);

}  // namespace planturan

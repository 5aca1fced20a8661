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

#include "planturan/graph.hpp"

namespace planturan {

// A directed edge ("dart") is identified by an integer. dart_tail/dart_head
// give its endpoints; twin() reverses it.
struct Face {
  std::vector<int> darts;
  std::vector<int> vertices;  // tail of each dart, in walk order
  int size() const { return static_cast<int>(darts.size()); }
  bool is_triangle() const { return darts.size() == 3; }
};

// Plane graph stored as a rotation system: rotation(v) lists the neighbours
// of v in counter-clockwise order. Faces are traced once at construction;
// the value is immutable afterwards.
class PlanarEmbedding {
 public:
  PlanarEmbedding() = default;

  // Validates symmetry, loops, duplicates and Euler's formula per component.
  static PlanarEmbedding from_rotation(const std::vector<std::string>& names,
                                       const std::vector<std::vector<std::string>>& rotation);
  static PlanarEmbedding from_rotation(std::vector<std::string> names,
                                       std::vector<std::vector<int>> rotation);

  const Graph& graph() const { return graph_; }
  int num_vertices() const { return graph_.num_vertices(); }
  int num_edges() const { return graph_.num_edges(); }
  int num_faces() const;  // traced faces plus one per isolated vertex
  const std::string& name(int v) const { return graph_.name(v); }

  const std::vector<int>& rotation(int v) const { return rotation_[v]; }
  const std::vector<std::vector<int>>& rotations() const { return rotation_; }

  int num_darts() const { return static_cast<int>(dart_head_.size()); }
  int dart(int tail, int head) const;  // throws kEdgeNotInGraph
  int dart_tail(int d) const { return dart_tail_[d]; }
  int dart_head(int d) const { return dart_head_[d]; }
  int twin(int d) const { return twin_[d]; }
  // Next dart along the face to the left of d.
  int next_in_face(int d) const { return next_[d]; }
  int face_of(int d) const { return face_of_dart_[d]; }
  // Undirected edge index shared by d and twin(d); matches graph().edges().
  int edge_of(int d) const { return edge_of_dart_[d]; }
  int edge_id(int u, int v) const { return edge_of(dart(u, v)); }
  const std::vector<Edge>& edge_list() const { return edges_; }

  const std::vector<Face>& faces() const { return faces_; }

  std::optional<int> outer_face_hint;

 private:
  void trace();

  Graph graph_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> offset_;
  std::vector<int> dart_tail_, dart_head_, twin_, next_, face_of_dart_, edge_of_dart_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  int isolated_ = 0;
};

// Mirrors every rotation; the result embeds the same graph.
PlanarEmbedding mirrored(const PlanarEmbedding& g);

}  // namespace planturan

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

#include <map>
#include <string>
#include <vector>

#include "planturan/embedding.hpp"
#include "planturan/io.hpp"

namespace planturan {

// A plane triangulation with six degree-4 vertices paired by three disjoint
// special edges, every other vertex of degree 6.
struct TkInstance {
  PlanarEmbedding embedding;
  std::vector<Edge> special_edges;

  int k() const { return embedding.num_vertices(); }
};

struct TkValidation {
  bool ok = true;
  // Machine-readable tags: notTriangulation, degreeProfile, specialEdges.
  std::vector<std::string> reasons;
  std::vector<std::string> details;
};

struct ConstructionTrace {
  int k = 0;
  int subdivision_count = 0;
  int holder_count = 0;
  int snowflake_count = 0;
  int n = 0;
  int e = 0;

  bool identities_hold() const {
    return subdivision_count == 3 * k - 9 && n == 21 * k + 12 && e == 54 * k + 24 && 7 * e == 18 * n - 48;
  }
};

TkInstance builtin_T15();
// Reads a rotation document with an extra "special_edges" key.
TkInstance parse_tk(const Json& doc);
TkValidation validate_Tk(const TkInstance& t);  // never throws

// Subdivides every non-special edge and replaces each special edge by a
// diamond holder. Throws kInvalidTk.
PlanarEmbedding build_base(const TkInstance& t);
// build_base followed by one snowflake per original vertex. Throws kInvalidTk.
PlanarEmbedding build_extremal(const TkInstance& t, ConstructionTrace* trace = nullptr);

PlanarEmbedding builtin_counterexample_13();
// fig7, fig8a, fig8b, fig8c
std::map<std::string, PlanarEmbedding> builtin_small_structures();

struct PentagonalStats {
  int levels = 0;
  int n = 0;
  int e = 0;
  int k5_count = 0;
  std::map<int, int> face_sizes;
};

// Nested pentagonal pieces glued ring to ring, then a K5 minus an edge
// planted in every triangle. levels >= 1, else kParseError.
PlanarEmbedding build_theta61_pentagonal(int levels, PentagonalStats* stats = nullptr);

}  // namespace planturan

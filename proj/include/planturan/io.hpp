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

#include <string>

#include "json.hpp"
#include "planturan/embedding.hpp"
#include "planturan/graph.hpp"

namespace planturan {

using Json = nlohmann::ordered_json;

// A parsed graph file. Files with a "rotation" key carry an embedding;
// files with only "edges" are abstract graphs.
struct GraphDocument {
  bool embedded = false;
  Graph graph;
  PlanarEmbedding embedding;  // valid iff embedded
  Json raw;                   // the whole document, for extra keys
};

// Throws kParseError plus any build_from_rotation error.
GraphDocument parse_graph_json(const std::string& text);
GraphDocument read_graph_file(const std::string& path);
std::string read_text_file(const std::string& path);

// The embedding of a document, computing one for abstract graphs.
PlanarEmbedding embedding_of(const GraphDocument& doc);

Json embedding_to_json(const PlanarEmbedding& g);
Json graph_to_json(const Graph& g);
// Two-space indented dump with a trailing newline.
std::string dump_json(const Json& j);

// Each undirected edge appears once with rot_index="i,j": its position in the
// rotation of the source and of the target.
std::string to_dot(const PlanarEmbedding& g);
std::string to_graphml(const PlanarEmbedding& g);
// Reads back what to_graphml writes. Throws kParseError.
PlanarEmbedding from_graphml(const std::string& text);

// format is one of json, dot, graphml; throws kUnknownFormat.
std::string export_graph(const PlanarEmbedding& g, const std::string& format);

}  // namespace planturan

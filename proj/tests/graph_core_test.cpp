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

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "planturan/blocks.hpp"
#include "planturan/canonical.hpp"
#include "planturan/construct.hpp"
#include "planturan/error.hpp"
#include "planturan/io.hpp"
#include "planturan/planarity.hpp"
#include "planturan/search.hpp"
#include "test_support.hpp"

namespace planturan {
namespace {

using testing::complete_graph;
using testing::cycle_embedding;
using testing::cycle_graph;
using testing::embed;
using testing::graph_of;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kParseError;
}

TEST(Embedding, TriangleHasTwoTriangularFaces) {
  auto g = embed({"a", "b", "c"}, {{"b", "c"}, {"c", "a"}, {"a", "b"}});
  ASSERT_EQ(g.faces().size(), 2u);
  for (const Face& f : g.faces()) EXPECT_TRUE(f.is_triangle());
}

TEST(Embedding, HexagonHasTwoSixFaces) {
  auto g = cycle_embedding(6);
  ASSERT_EQ(g.num_faces(), 2);
  EXPECT_EQ(g.faces()[0].size(), 6);
  EXPECT_EQ(g.faces()[1].size(), 6);
}

TEST(Embedding, K4HasFourTriangles) {
  auto g = testing::k4_embedding();
  EXPECT_EQ(g.num_vertices() - g.num_edges() + g.num_faces(), 2);
  ASSERT_EQ(g.num_faces(), 4);
  for (const Face& f : g.faces()) EXPECT_EQ(f.size(), 3);
}

TEST(Embedding, RejectsMalformedRotations) {
  EXPECT_EQ(code_of([] { embed({"a", "b"}, {{"b"}, {}}); }), ErrorCode::kAsymmetricRotation);
  EXPECT_EQ(code_of([] { embed({"a"}, {{"a"}}); }), ErrorCode::kSelfLoop);
  EXPECT_EQ(code_of([] { embed({"a", "b"}, {{"b", "b"}, {"a", "a"}}); }), ErrorCode::kDuplicateNeighbor);
  EXPECT_EQ(code_of([] { embed({"a", "b"}, {{"z"}, {"a"}}); }), ErrorCode::kAsymmetricRotation);
}

TEST(Embedding, RejectsNonPlanarRotation) {
  // K4 with one vertex's rotation reversed traces too few faces.
  EXPECT_EQ(code_of([] {
              embed({"a", "b", "c", "d"}, {{"b", "c", "d"}, {"c", "d", "a"}, {"a", "d", "b"}, {"a", "c", "b"}});
            }),
            ErrorCode::kNonPlanarRotation);
}

TEST(Embedding, DegenerateInputsCountOneFacePerComponent) {
  auto empty = embed({}, {});
  EXPECT_EQ(empty.num_faces(), 0);
  auto single = embed({"a"}, {{}});
  EXPECT_EQ(single.num_faces(), 1);
  auto two = embed({"a", "b", "c"}, {{}, {"c"}, {"b"}});
  EXPECT_EQ(two.num_faces(), 2);
}

TEST(Embedding, FaceSizesSumToTwiceEdges) {
  for (const char* name : {"t15", "refine13", "diamond4", "counterexample13", "fig8b"}) {
    auto g = testing::fixture_graph(name);
    int total = 0;
    for (const Face& f : g.faces()) total += f.size();
    EXPECT_EQ(total, 2 * g.num_edges()) << name;
  }
}

TEST(Embedding, EveryDartInExactlyOneFace) {
  auto g = testing::fixture_graph("refine13");
  std::vector<int> seen(g.num_darts(), 0);
  for (const Face& f : g.faces()) {
    for (int d : f.darts) ++seen[d];
  }
  for (int c : seen) EXPECT_EQ(c, 1);
}

TEST(Embedding, FacesIndependentOfVertexOrder) {
  auto g = testing::fixture_graph("fig8a");
  std::vector<int> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> rot;
    for (int v : order) {
      names.push_back(g.name(v));
      std::vector<std::string> r;
      for (int u : g.rotation(v)) r.push_back(g.name(u));
      rot.push_back(r);
    }
    EXPECT_EQ(testing::face_vertex_sets(embed(names, rot)), testing::face_vertex_sets(g));
  }
}

TEST(Embedding, MirrorKeepsFaceSizes) {
  auto g = testing::fixture_graph("fig8b");
  auto m = mirrored(g);
  std::multiset<int> a, b;
  for (const Face& f : g.faces()) a.insert(f.size());
  for (const Face& f : m.faces()) b.insert(f.size());
  EXPECT_EQ(a, b);
}

TEST(BlockCut, TwoTrianglesSharingAVertex) {
  auto g = graph_of(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  auto bc = block_cut_forest(g);
  EXPECT_EQ(bc.num_blocks(), 2);
  EXPECT_EQ(bc.cut_vertices, std::vector<int>{2});
  EXPECT_FALSE(is_2_connected(g));
  EXPECT_EQ(min_degree(g), 2);
}

TEST(BlockCut, CounterexampleHasThreeBlocks) {
  auto bc = block_cut_forest(builtin_counterexample_13());
  EXPECT_EQ(bc.num_blocks(), 3);
  EXPECT_EQ(bc.cut_vertices.size(), 2u);
}

TEST(BlockCut, CycleAndK4AreTwoConnected) {
  EXPECT_TRUE(is_2_connected(cycle_graph(6)));
  EXPECT_EQ(min_degree(cycle_graph(6)), 2);
  EXPECT_TRUE(is_2_connected(complete_graph(4)));
  EXPECT_EQ(min_degree(complete_graph(4)), 3);
  EXPECT_EQ(block_cut_forest(complete_graph(4)).num_blocks(), 1);
}

// Sum over blocks of (|B| - 1) equals v - (number of components).
TEST(BlockCut, SizeIdentityOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    SmallGraph s = random_planar_graph(rng, 2 + trial % 11, 0.3);
    Graph g = s.to_graph();
    auto bc = block_cut_forest(g);
    int total = 0;
    for (const auto& b : bc.blocks) total += static_cast<int>(b.size()) - 1;
    EXPECT_EQ(total, g.num_vertices() - count_components(g));
    for (int c : bc.cut_vertices) {
      int holders = 0;
      for (const auto& b : bc.blocks) holders += std::binary_search(b.begin(), b.end(), c);
      EXPECT_GE(holders, 2);
    }
  }
}

TEST(Planarity, SmallCases) {
  EXPECT_TRUE(is_planar(complete_graph(4)));
  EXPECT_FALSE(is_planar(complete_graph(5)));
  Graph k33(6);
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
  }
  EXPECT_FALSE(is_planar(k33));
  EXPECT_EQ(code_of([&] { planarity_embed(k33); }), ErrorCode::kNonPlanarGraph);
  EXPECT_EQ(code_of([] { planarity_embed(complete_graph(5)); }), ErrorCode::kNonPlanarGraph);
  auto e = planarity_embed(complete_graph(4));
  EXPECT_EQ(e.num_faces(), 4);
}

TEST(Planarity, EmbeddingIsDeterministic) {
  Graph g = builtin_T15().embedding.graph();
  EXPECT_EQ(embedding_to_json(planarity_embed(g)), embedding_to_json(planarity_embed(g)));
}

TEST(Canonical, RelabelledCyclesAgree) {
  SmallGraph c6 = SmallGraph::from_graph(cycle_graph(6));
  SmallGraph other = testing::permuted(c6, {3, 0, 5, 1, 4, 2});
  EXPECT_EQ(canonical_code(c6), canonical_code(other));
  SmallGraph theta = c6;
  theta.add_edge(0, 3);
  EXPECT_NE(canonical_code(c6), canonical_code(theta));
}

TEST(Canonical, PathIsTheTwoStar) {
  EXPECT_EQ(canonical_code(graph_of(3, {{0, 1}, {1, 2}})), canonical_code(graph_of(3, {{1, 0}, {0, 2}})));
}

TEST(Canonical, CeilingIsEnforced) {
  EXPECT_EQ(code_of([] { canonical_code(cycle_graph(11)); }), ErrorCode::kCeilingExceeded);
  EXPECT_NO_THROW(canonical_code(cycle_graph(11), 12));
}

TEST(Canonical, InvariantUnderRandomRelabelling) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 8;
    SmallGraph g = random_planar_graph(rng, n, 0.5);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    ASSERT_EQ(canonical_code(g), canonical_code(testing::permuted(g, perm)));
  }
}

// Equal codes exactly when the brute-force permutation minimum agrees.
TEST(Canonical, MatchesBruteForceIsomorphism) {
  std::mt19937_64 rng(99);
  std::vector<SmallGraph> pool;
  for (int i = 0; i < 150; ++i) pool.push_back(random_planar_graph(rng, 6, 0.45));
  std::vector<std::vector<bool>> brute;
  for (const auto& g : pool) brute.push_back(testing::brute_canonical(g));
  for (size_t i = 0; i < pool.size(); ++i) {
    for (size_t j = i + 1; j < pool.size(); ++j) {
      ASSERT_EQ(canonical_code(pool[i]) == canonical_code(pool[j]), brute[i] == brute[j]);
    }
  }
}

TEST(Canonical, DecodeRoundTrips) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    SmallGraph g = random_planar_graph(rng, 1 + i % 9, 0.5);
    const std::string code = canonical_code(g);
    SmallGraph d = decode_canonical_code(code);
    EXPECT_EQ(canonical_code(d), code);
    EXPECT_EQ(d, canonical_form(g));
    EXPECT_EQ(hex_to_code(code_to_hex(code)), code);
  }
}

TEST(Io, JsonRoundTripIsByteIdentical) {
  for (const char* name : {"t15", "refine13", "fig7", "wheel6"}) {
    auto g = testing::fixture_graph(name);
    const std::string once = dump_json(embedding_to_json(g));
    const std::string twice = dump_json(embedding_to_json(embedding_of(parse_graph_json(once))));
    EXPECT_EQ(once, twice) << name;
  }
}

TEST(Io, DotOfK4HasSixEdgeLines) {
  const std::string dot = to_dot(testing::k4_embedding());
  int edges = 0;
  for (size_t p = dot.find(" -- "); p != std::string::npos; p = dot.find(" -- ", p + 1)) ++edges;
  EXPECT_EQ(edges, 6);
  EXPECT_NE(dot.find("rot_index"), std::string::npos);
}

TEST(Io, GraphmlReimportsTheSameRotation) {
  auto t = builtin_T15().embedding;
  auto back = from_graphml(to_graphml(t));
  EXPECT_EQ(canonical_code(back.graph(), 16), canonical_code(t.graph(), 16));
  EXPECT_EQ(dump_json(embedding_to_json(back)), dump_json(embedding_to_json(t)));
}

TEST(Io, AbstractGraphsGetEmbedded) {
  auto doc = parse_graph_json(R"({"edges": [["a","b"],["b","c"],["c","a"],["c","d"]]})");
  EXPECT_FALSE(doc.embedded);
  auto g = embedding_of(doc);
  EXPECT_EQ(g.num_edges(), 4);
  EXPECT_EQ(g.num_faces(), 2);
}

TEST(Io, ErrorsAreTyped) {
  EXPECT_EQ(code_of([] { parse_graph_json("{"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_graph_json(R"({"n": 3, "rotation": {"a": []}})"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { export_graph(testing::k4_embedding(), "svg"); }), ErrorCode::kUnknownFormat);
}

}  // namespace
}  // namespace planturan

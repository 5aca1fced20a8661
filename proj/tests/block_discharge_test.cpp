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

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "planturan/discharge.hpp"
#include "planturan/triangular.hpp"
#include "test_support.hpp"

namespace planturan {
namespace {

using testing::embed;
using testing::fixture_graph;

std::multiset<std::string> kinds_of(const Decomposition& d) {
  std::multiset<std::string> out;
  for (const auto& b : d.blocks) out.insert(b.kind ? kind_name(*b.kind) : "?");
  return out;
}

// Blocks as (kind, vertex names) so that two labelings can be compared.
std::set<std::pair<std::string, std::set<std::string>>> named_blocks(const PlanarEmbedding& g,
                                                                     const Decomposition& d) {
  std::set<std::pair<std::string, std::set<std::string>>> out;
  for (const auto& b : d.blocks) {
    std::set<std::string> names;
    for (int v : b.vertices) names.insert(g.name(v));
    out.insert({b.kind ? kind_name(*b.kind) : "?", names});
  }
  return out;
}

PlanarEmbedding reordered(const PlanarEmbedding& g, std::mt19937_64& rng) {
  std::vector<int> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> rot;
  for (int v : order) {
    names.push_back(g.name(v));
    std::vector<std::string> r;
    for (int u : g.rotation(v)) r.push_back(g.name(u));
    std::rotate(r.begin(), r.begin() + static_cast<long>(rng() % r.size()), r.end());
    rot.push_back(r);
  }
  return embed(names, rot);
}

TEST(Classify, Templates) {
  for (const std::string k : {"B2", "B3", "B4a", "B4b", "B5a", "B5b", "B5c", "B5d"}) {
    const Graph g = fixture_graph("blocks/" + k).graph();
    EXPECT_EQ(kind_name(classify(g)), k);
  }
}

TEST(Classify, UnknownShapes) {
  // Octahedron: six vertices.
  const Graph oct = testing::graph_of(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {5, 1}, {5, 2}, {5, 3}, {5, 4},
                                          {1, 2}, {2, 3}, {3, 4}, {4, 1}});
  try {
    classify(oct);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownBlockShape);
  }
  EXPECT_THROW(classify(testing::cycle_graph(4)), Error);
  EXPECT_THROW(classify(testing::complete_graph(5)), Error);
}

TEST(Decompose, SmallHosts) {
  EXPECT_EQ(kinds_of(decompose(testing::k4_embedding())), std::multiset<std::string>{"B4a"});
  EXPECT_EQ(kinds_of(decompose(testing::cycle_embedding(6))), std::multiset<std::string>(
                                                                   {"B2", "B2", "B2", "B2", "B2", "B2"}));
  EXPECT_EQ(kinds_of(decompose(testing::cycle_embedding(3))), std::multiset<std::string>{"B3"});
}

TEST(Decompose, EdgesPartitioned) {
  const auto g = fixture_graph("refine13");
  const auto d = decompose(g);
  std::vector<int> seen(g.num_edges(), 0);
  for (size_t i = 0; i < d.blocks.size(); ++i) {
    for (int e : d.blocks[i].edges) {
      ++seen[e];
      EXPECT_EQ(d.block_of_edge[e], static_cast<int>(i));
    }
  }
  EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  for (size_t i = 1; i < d.blocks.size(); ++i) EXPECT_LT(d.blocks[i - 1].edges[0], d.blocks[i].edges[0]);
}

TEST(Decompose, PairOfK5MinusSharingAVertex) {
  const auto g = fixture_graph("fig8a");
  const auto d = decompose(g);
  EXPECT_EQ(kinds_of(d), std::multiset<std::string>({"B5a", "B5a"}));
  int junctions = 0;
  for (int v = 0; v < g.num_vertices(); ++v) junctions += d.is_junction(v);
  EXPECT_EQ(junctions, 1);
}

TEST(Decompose, Counterexample) {
  const auto kinds = kinds_of(decompose(fixture_graph("counterexample13")));
  EXPECT_EQ(kinds.count("B5a"), 3u);
}

TEST(Decompose, TriangularBlockOfEdge) {
  const auto g = testing::k4_embedding();
  const auto b = triangular_block_of(g, {0, 1});
  EXPECT_EQ(b.num_edges(), 6);
  EXPECT_EQ(b.triangular_face_count, 4);
  try {
    triangular_block_of(testing::cycle_embedding(5), {0, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEdgeNotInGraph);
  }
}

TEST(Decompose, IndependentOfInputOrder) {
  std::mt19937_64 rng(5);
  for (const char* name : {"refine13", "diamond4", "counterexample13", "fig7"}) {
    const auto g = fixture_graph(name);
    const auto expected = named_blocks(g, decompose(g));
    for (int i = 0; i < 5; ++i) {
      const auto h = reordered(g, rng);
      EXPECT_EQ(named_blocks(h, decompose(h)), expected) << name;
    }
  }
}

TEST(Refinement, ThirteenFace) {
  const auto g = fixture_graph("refine13");
  const auto d = decompose(g);
  int face = -1;
  for (size_t f = 0; f < g.faces().size(); ++f) {
    if (g.faces()[f].size() == 13) face = static_cast<int>(f);
  }
  ASSERT_GE(face, 0);
  const auto r = refine_face(g, d, face);
  EXPECT_EQ(r.size, 13);
  EXPECT_EQ(r.refined_size, 11);
  std::set<std::set<std::string>> cherries;
  std::set<std::string> removed;
  for (const auto& c : r.bad_cherries) {
    cherries.insert({g.name(c[0]), g.name(c[1]), g.name(c[2])});
    removed.insert(g.name(c[1]));
  }
  EXPECT_EQ(cherries, (std::set<std::set<std::string>>{{"x5", "x6", "x7"}, {"x9", "x10", "x11"}}));
  EXPECT_EQ(removed, (std::set<std::string>{"x6", "x10"}));
}

TEST(Refinement, ExteriorPathsCoverNonTriangularFaces) {
  const auto g = fixture_graph("refine13");
  const auto d = decompose(g);
  for (size_t b = 0; b < d.blocks.size(); ++b) {
    for (const auto& p : exterior_structure(g, d, static_cast<int>(b))) {
      EXPECT_GE(p.length(), 1);
      EXPECT_FALSE(g.faces()[p.face].is_triangle());
      if (p.bad_cherry) EXPECT_EQ(p.length(), 2);
    }
  }
}

TEST(Hypothesis, Reasons) {
  auto reason = [](const PlanarEmbedding& g) {
    try {
      check_standing_hypothesis(g, decompose(g));
    } catch (const HypothesisViolated& e) {
      return reason_name(e.reason());
    }
    return std::string("ok");
  };
  EXPECT_EQ(reason(fixture_graph("fig8a")), "not2conn");
  EXPECT_EQ(reason(testing::cycle_embedding(6)), "minDeg");
  EXPECT_EQ(reason(testing::k4_embedding()), "singleBlock");
  EXPECT_EQ(reason(fixture_graph("diamond4")), "ok");
}

TEST(Audit, ThetaHostsAreRejected) {
  try {
    audit(fixture_graph("refine13"));
    FAIL();
  } catch (const ThetaFound& e) {
    EXPECT_EQ(e.code(), ErrorCode::kThetaFound);
    EXPECT_EQ(validate_witness(fixture_graph("refine13").graph(), e.witness(), 6), "");
  }
}

TEST(Audit, DoubledFourFaceGroup) {
  const auto g = fixture_graph("diamond4");
  const auto d = decompose(g);
  const auto grouping = partition_groups(g, d);
  ASSERT_EQ(grouping.num_special(), 1);
  ASSERT_EQ(grouping.groups[0].size(), 5u);
  EXPECT_EQ(*d.blocks[grouping.groups[0][0]].kind, BlockKind::kB4b);
  for (size_t i = 1; i < 5; ++i) EXPECT_EQ(*d.blocks[grouping.groups[0][i]].kind, BlockKind::kB2);

  const auto r = audit(g);
  EXPECT_TRUE(r.passed());
  const auto& head = r.per_block[grouping.groups[0][0]];
  EXPECT_EQ(head.bound, Rational(3));
  EXPECT_EQ(head.c.g, Rational(3));
  EXPECT_LE(r.group_sums[0], Rational(0));
  EXPECT_EQ(r.total, Rational(-20));
}

// The host has a Theta6, so the audit itself stops earlier; the grouping
// step alone must still refuse to hand one trivial block to two owners.
TEST(Audit, SharedBadBlockIsRefused) {
  const auto g = fixture_graph("shared_diamonds");
  const auto d = decompose(g);
  try {
    partition_groups(g, d);
    FAIL();
  } catch (const SharedBadBlock& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSharedBadBlock);
    EXPECT_NE(e.first(), e.second());
    EXPECT_EQ(*d.blocks[e.bad_block()].kind, BlockKind::kB2);
  }
  EXPECT_THROW(audit(g), ThetaFound);
}

TEST(Audit, Identities) {
  const auto g = fixture_graph("diamond4");
  const auto r = audit(g);
  EXPECT_TRUE(r.identities_hold());
  EXPECT_EQ(r.sum_e, g.num_edges());
  EXPECT_EQ(r.sum_n, Rational(g.num_vertices()));
  EXPECT_EQ(r.sum_f, Rational(r.f));
  EXPECT_EQ(r.total, r.euler_total);
  EXPECT_EQ(r.euler_total, Rational(24 * r.f - 17 * r.e + 6 * r.v));
}

TEST(Audit, ContributionFormula) {
  const auto g = fixture_graph("diamond4");
  const auto d = decompose(g);
  for (size_t b = 0; b < d.blocks.size(); ++b) {
    const auto c = contributions(g, d, static_cast<int>(b));
    EXPECT_EQ(c.e, d.blocks[b].num_edges());
    EXPECT_EQ(c.g, Rational(24) * c.f - Rational(17 * c.e) + Rational(6) * c.n);
  }
}

TEST(Audit, JsonReport) {
  const auto g = fixture_graph("diamond4");
  const auto d = decompose(g);
  const auto j = charge_report_to_json(g, d, audit(g));
  EXPECT_EQ(j["verdict"]["pass"], true);
  EXPECT_EQ(j["blocks"].size(), d.blocks.size());
  EXPECT_EQ(j["total"], "-20/1");
  const auto dj = decomposition_to_json(g, d);
  EXPECT_EQ(dj["blocks"].size(), d.blocks.size());
}

}  // namespace
}  // namespace planturan

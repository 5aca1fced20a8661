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

#include <random>

#include "planturan/error.hpp"
#include "planturan/search.hpp"
#include "planturan/theta.hpp"
#include "test_support.hpp"

namespace planturan {
namespace {

using testing::cycle_graph;
using testing::graph_of;

Graph theta6_graph() {
  Graph g = cycle_graph(6);
  g.add_edge(0, 3);
  return g;
}

TEST(ThetaFamily, Size) {
  EXPECT_EQ(theta_family_size(4), 1);
  EXPECT_EQ(theta_family_size(5), 1);
  EXPECT_EQ(theta_family_size(6), 2);
  EXPECT_EQ(theta_family_size(9), 3);
  try {
    theta_family_size(3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kKTooSmall);
  }
}

TEST(ThetaFamily, ParseAndName) {
  EXPECT_EQ(Family::parse("theta6").name(), "theta6");
  EXPECT_EQ(Family::parse("theta6-sym").variant, 3);
  EXPECT_EQ(Family::parse("theta6-asym").variant, 2);
  EXPECT_EQ(Family::parse("theta8-d4").name(), "theta8-d4");
  EXPECT_EQ(Family::parse("c5").kind, Family::Kind::kCycle);
  EXPECT_THROW(Family::parse("theta7-sym"), Error);
  EXPECT_THROW(Family::parse("theta6-d4"), Error);
  EXPECT_THROW(Family::parse("k5"), Error);
}

TEST(FindCycle, Basics) {
  EXPECT_TRUE(find_cycle(cycle_graph(6), 6));
  EXPECT_FALSE(find_cycle(graph_of(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}}), 6));
  EXPECT_FALSE(find_cycle(graph_of(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}}), 3));
  EXPECT_TRUE(find_cycle(theta6_graph(), 6));
  EXPECT_TRUE(find_cycle(theta6_graph(), 4));
  EXPECT_FALSE(find_cycle(theta6_graph(), 5));
}

TEST(FindTheta, CycleWithChord) {
  auto w = find_theta(theta6_graph(), 6);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->variant, 3);
  EXPECT_EQ(validate_witness(theta6_graph(), *w, 6), "");
  EXPECT_FALSE(find_theta(theta6_graph(), 6, 2));
  EXPECT_FALSE(find_theta(cycle_graph(6), 6));
}

TEST(FindTheta, SmallGraphsAreFree) {
  EXPECT_FALSE(find_theta(testing::complete_graph(5), 6));
}

// The wheel-like block: the least witness differs from the one quoted for it,
// but that one must also validate.
TEST(FindTheta, WheelBlockWitness) {
  const Graph g = testing::fixture_graph("wheel6").graph();
  auto w = find_theta(g, 6);
  ASSERT_TRUE(w);
  EXPECT_EQ(validate_witness(g, *w, 6), "");
  EXPECT_EQ(w, brute_force_theta(g, 6));
  auto id = [&](const char* s) { return g.index_of(s); };
  ThetaWitness quoted{{id("x1"), id("x6"), id("x5"), id("x2"), id("x4"), id("x3")}, {id("x1"), id("x2")}, 3};
  EXPECT_EQ(validate_witness(g, quoted, 6), "");
}

TEST(FindTheta, WitnessesAreNormalised) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_planar_graph(rng, 6 + i % 5, 0.6).to_graph();
    auto w = find_theta(g, 6);
    if (!w) continue;
    EXPECT_EQ(validate_witness(g, *w, 6), "");
    EXPECT_EQ(*std::min_element(w->cycle.begin(), w->cycle.end()), w->cycle.front());
    EXPECT_LT(w->cycle[1], w->cycle.back());
    EXPECT_LT(w->chord.first, w->chord.second);
  }
}

TEST(FindTheta, ValidateRejectsBrokenWitnesses) {
  const Graph g = theta6_graph();
  ThetaWitness w = *find_theta(g, 6);
  ThetaWitness bad = w;
  bad.variant = 2;
  EXPECT_NE(validate_witness(g, bad, 6), "");
  bad = w;
  bad.chord = {w.cycle[0], w.cycle[1]};
  EXPECT_NE(validate_witness(g, bad, 6), "");
  bad = w;
  std::swap(bad.cycle[1], bad.cycle[2]);
  EXPECT_NE(validate_witness(g, bad, 6), "");
}

// Exhaustive over every connected planar class up to 7 vertices, for every
// filter, comparing full witnesses rather than verdicts alone.
TEST(FindTheta, AgreesWithBruteForceOnEnumeration) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& s : enumerate_planar(n)) {
      const Graph g = s.to_graph();
      for (std::optional<int> variant : {std::optional<int>(), std::optional<int>(2), std::optional<int>(3)}) {
        ASSERT_EQ(find_theta(g, 6, variant), brute_force_theta(g, 6, variant));
      }
      ASSERT_EQ(find_theta(g, 5), brute_force_theta(g, 5));
    }
  }
}

TEST(FindTheta, AgreesWithBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> size(1, 10);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = random_planar_graph(rng, size(rng), density(rng)).to_graph();
    ASSERT_EQ(find_theta(g, 6), brute_force_theta(g, 6));
  }
}

TEST(FindTheta, VariantsCoverTheUnfilteredFamily) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    const Graph g = random_planar_graph(rng, 6 + i % 5, 0.5).to_graph();
    const bool any = find_theta(g, 6).has_value();
    EXPECT_EQ(any, find_theta(g, 6, 2).has_value() || find_theta(g, 6, 3).has_value());
  }
}

TEST(FindTheta, FreenessSurvivesEdgeDeletion) {
  std::mt19937_64 rng(29);
  int free_graphs = 0;
  for (int i = 0; i < 400 && free_graphs < 60; ++i) {
    const Graph g = random_planar_graph(rng, 7 + i % 4, 0.35).to_graph();
    if (find_theta(g, 6)) continue;
    ++free_graphs;
    for (auto [u, v] : g.edges()) EXPECT_FALSE(find_theta(g.without_edge(u, v), 6));
  }
  EXPECT_GT(free_graphs, 10);
}

}  // namespace
}  // namespace planturan

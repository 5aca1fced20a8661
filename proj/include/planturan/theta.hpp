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

// A k-cycle plus one chord. Cycles are normalised: cycle[0] is the smallest
// vertex and cycle[1] < cycle.back(); chord.first < chord.second.
struct ThetaWitness {
  std::vector<int> cycle;
  Edge chord;
  int variant = 0;  // chord distance along the cycle

  bool operator==(const ThetaWitness& o) const {
    return cycle == o.cycle && chord == o.chord && variant == o.variant;
  }
};

// Forbidden family descriptor used by detection and search: the k-cycle, or
// the Theta graphs on k vertices (optionally only one chord distance).
struct Family {
  enum class Kind { kCycle, kTheta };
  Kind kind = Kind::kTheta;
  int k = 6;
  std::optional<int> variant;

  // "theta6", "theta6-sym", "theta6-asym", "theta7-d3", "c5"
  std::string name() const;
  static Family parse(const std::string& text);  // throws kParseError / kKTooSmall
};

// floor(k/2) - 1; throws kKTooSmall for k < 4.
int theta_family_size(int k);

// Lexicographically least k-cycle (normalised as above), if any.
std::optional<std::vector<int>> find_cycle(const Graph& g, int k);

// Lexicographically least witness under the input vertex order: least cycle
// first, then least chord. variant restricts the chord distance.
std::optional<ThetaWitness> find_theta(const Graph& g, int k, std::optional<int> variant = std::nullopt);

// Independent oracle: every k-subset, every cyclic order. Same witness as
// find_theta by construction of the ordering, not by shared code.
std::optional<ThetaWitness> brute_force_theta(const Graph& g, int k, std::optional<int> variant = std::nullopt);

// Checks the ThetaWitness invariants against g; empty string when valid.
std::string validate_witness(const Graph& g, const ThetaWitness& w, int k);

bool contains_family(const Graph& g, const Family& f);

}  // namespace planturan

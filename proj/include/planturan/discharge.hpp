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
#include <optional>
#include <string>
#include <vector>

#include "planturan/embedding.hpp"
#include "planturan/error.hpp"
#include "planturan/io.hpp"
#include "planturan/rational.hpp"
#include "planturan/theta.hpp"
#include "planturan/triangular.hpp"

namespace planturan {

enum class HypothesisReason { kNot2Conn, kMinDeg, kSingleBlock };
std::string reason_name(HypothesisReason r);  // not2conn, minDeg, singleBlock

class HypothesisViolated : public Error {
 public:
  explicit HypothesisViolated(HypothesisReason r)
      : Error(ErrorCode::kHypothesisViolated, reason_name(r)), reason_(r) {}
  HypothesisReason reason() const { return reason_; }

 private:
  HypothesisReason reason_;
};

class ThetaFound : public Error {
 public:
  explicit ThetaFound(ThetaWitness w) : Error(ErrorCode::kThetaFound, "host contains Theta6"), witness_(std::move(w)) {}
  const ThetaWitness& witness() const { return witness_; }

 private:
  ThetaWitness witness_;
};

class SharedBadBlock : public Error {
 public:
  SharedBadBlock(int bad_block, int first, int second)
      : Error(ErrorCode::kSharedBadBlock, "trivial block " + std::to_string(bad_block) + " is bad for blocks " +
                                              std::to_string(first) + " and " + std::to_string(second)),
        bad_block_(bad_block), first_(first), second_(second) {}
  int bad_block() const { return bad_block_; }
  int first() const { return first_; }
  int second() const { return second_; }

 private:
  int bad_block_, first_, second_;
};

// 2-connected, minimum degree >= 3, at least two triangular blocks.
void check_standing_hypothesis(const PlanarEmbedding& g, const Decomposition& d);

// Maximal run of one block's edges along a non-triangular face between
// consecutive junction vertices.
struct ExteriorPath {
  std::vector<int> vertices;
  int face = -1;
  bool bad_cherry = false;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

struct FaceRefinement {
  int face = -1;
  int size = 0;
  int refined_size = 0;
  std::vector<std::array<int, 3>> bad_cherries;  // (x_i, x_j, x_k), x_j removed
};

struct Contribution {
  int e = 0;
  Rational n, f, g;
};

// Groups of blocks: one per doubled-4-face B4b (the block first, then its
// four bad trivial blocks), and the residual group last.
struct Grouping {
  std::vector<std::vector<int>> groups;
  int num_special() const { return static_cast<int>(groups.size()) - 1; }
};

std::vector<ExteriorPath> exterior_structure(const PlanarEmbedding& g, const Decomposition& d, int block);
FaceRefinement refine_face(const PlanarEmbedding& g, const Decomposition& d, int face);
Contribution contributions(const PlanarEmbedding& g, const Decomposition& d, int block);
// Throws SharedBadBlock when a bad block would be claimed twice.
Grouping partition_groups(const PlanarEmbedding& g, const Decomposition& d);

struct BlockCharge {
  int block = -1;
  BlockKind kind = BlockKind::kB2;
  Contribution c;
  Rational bound;  // 3 for B4b, 0 otherwise
  bool within_bound = true;
  bool face_count_matches_template = true;
};

struct ChargeReport {
  int v = 0, e = 0, f = 0;
  std::vector<BlockCharge> per_block;
  Grouping grouping;
  std::vector<Rational> group_sums;
  Rational total;        // sum of g over blocks
  Rational euler_total;  // 24 f(G) - 17 e(G) + 6 v(G), computed directly
  Rational sum_n, sum_f;
  int sum_e = 0;

  bool identities_hold() const;
  bool per_block_ok() const;
  bool groups_ok() const;
  bool total_ok() const { return total <= Rational(0); }
  bool passed() const { return identities_hold() && per_block_ok() && groups_ok() && total_ok(); }
};

// Throws HypothesisViolated, ThetaFound, SharedBadBlock, kUnknownBlockShape.
ChargeReport audit(const PlanarEmbedding& g);
// Same, on a precomputed decomposition, skipping the Theta6 scan. For callers
// that already know the host is Theta6-free.
ChargeReport audit_known_free(const PlanarEmbedding& g, const Decomposition& d);

Json charge_report_to_json(const PlanarEmbedding& g, const Decomposition& d, const ChargeReport& r);
Json decomposition_to_json(const PlanarEmbedding& g, const Decomposition& d);

}  // namespace planturan

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

#include <stdexcept>
#include <string>
#include <string_view>

namespace planturan {

enum class ErrorCode {
  kAsymmetricRotation,
  kSelfLoop,
  kDuplicateNeighbor,
  kNonPlanarRotation,
  kNonPlanarGraph,
  kCeilingExceeded,
  kKTooSmall,
  kEdgeNotInGraph,
  kUnknownVertex,
  kUnknownBlockShape,
  kHypothesisViolated,
  kThetaFound,
  kSharedBadBlock,
  kInvalidTk,
  kBoundViolated,
  kUnknownFormat,
  kParseError,
};

std::string_view error_name(ErrorCode code);

// Every library failure is an Error carrying one of the codes above. The
// message is for humans; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace planturan

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

#include "planturan/fixtures.hpp"

#include <utility>

#include "planturan/error.hpp"

namespace planturan {
namespace detail {
extern const std::pair<std::string_view, std::string_view> kFixtures[];
extern const int kFixtureCount;
}  // namespace detail

std::string_view fixture(std::string_view name) {
  for (int i = 0; i < detail::kFixtureCount; ++i) {
    if (detail::kFixtures[i].first == name) return detail::kFixtures[i].second;
  }
  throw Error(ErrorCode::kParseError, "no fixture named '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (int i = 0; i < detail::kFixtureCount; ++i) out.emplace_back(detail::kFixtures[i].first);
  return out;
}

uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace planturan

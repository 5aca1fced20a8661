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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace planturan {

// Fixture files compiled into the library. Names are paths relative to
// fixtures/ without the .json suffix, e.g. "t15" or "blocks/B5a".
std::string_view fixture(std::string_view name);  // throws kParseError
std::vector<std::string> fixture_names();

// 64-bit FNV-1a of the fixture bytes, for --version.
uint64_t fnv1a64(std::string_view bytes);

}  // namespace planturan

// Copyright 2026 The iterfix Authors
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

#ifndef ITERFIX_ENGINE_DIFF_H_
#define ITERFIX_ENGINE_DIFF_H_

#include <string>
#include <string_view>
#include <vector>

namespace iterfix::engine {

// Unified diff (3 lines of context) from `before` to `after`. Empty when the
// inputs are equal.
std::string UnifiedDiff(const std::vector<std::string>& before,
                        const std::vector<std::string>& after,
                        std::string_view name = "program.mini");

// Applies a diff produced by UnifiedDiff. Throws InputError when a hunk does
// not match `before`.
std::vector<std::string> ApplyUnifiedDiff(const std::vector<std::string>& before,
                                          std::string_view diff);

}  // namespace iterfix::engine

#endif  // ITERFIX_ENGINE_DIFF_H_

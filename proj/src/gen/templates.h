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

#ifndef ITERFIX_GEN_TEMPLATES_H_
#define ITERFIX_GEN_TEMPLATES_H_

#include <vector>

#include "gen/context.h"
#include "gen/patch.h"

namespace iterfix::gen {

// Every instantiation of every applicable fix template at ctx.target_line,
// unranked. Template ids have the form "<family>" or "<family>:<variant>".
//
// Text templates (compile-error contexts, usable on unparseable sources):
//   insert-missing-delimiter, delete-stray-token, insert-semicolon,
//   rename-to-nearest-declared.
// Statement templates (whenever the source parses):
//   replace-binop, off-by-one-literal, replace-variable, negate-condition,
//   swap-call-args, widen-condition, narrow-condition, delete-statement,
//   insert-guard-return.
std::vector<CandidatePatch> EnumerateCandidates(const RepairContext& ctx);

// Restricted Damerau-Levenshtein (optimal string alignment) distance.
int EditDistance(std::string_view a, std::string_view b);

}  // namespace iterfix::gen

#endif  // ITERFIX_GEN_TEMPLATES_H_

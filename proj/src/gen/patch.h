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

#ifndef ITERFIX_GEN_PATCH_H_
#define ITERFIX_GEN_PATCH_H_

#include <string>
#include <vector>

#include "lang/source.h"

namespace iterfix::gen {

// Replaces lines [start_line, end_line] with `replacement`. An empty
// replacement deletes the range; start_line == end_line == line_count + 1
// appends at end of file.
struct CandidatePatch {
  int start_line = 1;
  int end_line = 1;
  std::vector<std::string> replacement;
  std::string template_id;
  double score = 0.0;
  int beam_rank = 0;

  bool operator==(const CandidatePatch& other) const = default;
};

bool IsEofInsertion(const std::vector<std::string>& lines, const CandidatePatch& patch);

// Throws ContractError when the range is not valid for `lines`.
std::vector<std::string> ApplyToLines(const std::vector<std::string>& lines,
                                      const CandidatePatch& patch);

lang::SourceProgram ApplyPatch(const lang::SourceProgram& source,
                               const CandidatePatch& patch);

// A patch that, applied to ApplyPatch(source, patch), restores source.
CandidatePatch InvertPatch(const lang::SourceProgram& source,
                           const CandidatePatch& patch);

}  // namespace iterfix::gen

#endif  // ITERFIX_GEN_PATCH_H_

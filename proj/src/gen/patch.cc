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

#include "gen/patch.h"

#include "common/errors.h"

namespace iterfix::gen {

bool IsEofInsertion(const std::vector<std::string>& lines, const CandidatePatch& patch) {
  int eof = static_cast<int>(lines.size()) + 1;
  return patch.start_line == eof && patch.end_line == eof;
}

std::vector<std::string> ApplyToLines(const std::vector<std::string>& lines,
                                      const CandidatePatch& patch) {
  int count = static_cast<int>(lines.size());
  std::vector<std::string> out;
  if (IsEofInsertion(lines, patch)) {
    out = lines;
    out.insert(out.end(), patch.replacement.begin(), patch.replacement.end());
    return out;
  }
  if (patch.start_line < 1 || patch.start_line > patch.end_line || patch.end_line > count) {
    throw ContractError("patch range [" + std::to_string(patch.start_line) + ", " +
                        std::to_string(patch.end_line) + "] invalid for " +
                        std::to_string(count) + " lines");
  }
  out.reserve(lines.size() + patch.replacement.size());
  out.insert(out.end(), lines.begin(), lines.begin() + (patch.start_line - 1));
  out.insert(out.end(), patch.replacement.begin(), patch.replacement.end());
  out.insert(out.end(), lines.begin() + patch.end_line, lines.end());
  return out;
}

lang::SourceProgram ApplyPatch(const lang::SourceProgram& source,
                               const CandidatePatch& patch) {
  return lang::SourceProgram::FromLines(ApplyToLines(source.lines(), patch));
}

CandidatePatch InvertPatch(const lang::SourceProgram& source, const CandidatePatch& patch) {
  const std::vector<std::string>& lines = source.lines();
  std::vector<std::string> patched = ApplyToLines(lines, patch);
  CandidatePatch inverse;
  inverse.template_id = "inverse";
  int added = static_cast<int>(patch.replacement.size());
  if (IsEofInsertion(lines, patch)) {
    // Fold the appended lines back into the original last line.
    int last = static_cast<int>(lines.size());
    inverse.start_line = last;
    inverse.end_line = last + added;
    inverse.replacement = {lines.back()};
    return inverse;
  }
  std::vector<std::string> removed(lines.begin() + (patch.start_line - 1),
                                   lines.begin() + patch.end_line);
  if (added > 0) {
    inverse.start_line = patch.start_line;
    inverse.end_line = patch.start_line + added - 1;
    inverse.replacement = std::move(removed);
    return inverse;
  }
  if (patched.empty()) {
    // The split of "" is one empty line.
    inverse.start_line = 1;
    inverse.end_line = 1;
    inverse.replacement = std::move(removed);
    return inverse;
  }
  if (patch.start_line > 1) {
    int anchor = patch.start_line - 1;
    inverse.start_line = anchor;
    inverse.end_line = anchor;
    inverse.replacement.push_back(patched[static_cast<size_t>(anchor - 1)]);
    inverse.replacement.insert(inverse.replacement.end(), removed.begin(), removed.end());
    return inverse;
  }
  inverse.start_line = 1;
  inverse.end_line = 1;
  inverse.replacement = std::move(removed);
  inverse.replacement.push_back(patched.front());
  return inverse;
}

}  // namespace iterfix::gen

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

#ifndef ITERFIX_CHECK_CHECKER_H_
#define ITERFIX_CHECK_CHECKER_H_

#include <string>
#include <string_view>
#include <vector>

#include "lang/source.h"

namespace iterfix::check {

// Declaration order is the sort order for diagnostics on the same line.
enum class DiagKind {
  kParseError,
  kUndefinedVariable,
  kUndefinedFunction,
  kArityMismatch,
  kTypeMismatch,
  kDuplicateDefinition,
  kMissingReturn,
};

struct CompileDiagnostic {
  DiagKind kind = DiagKind::kParseError;
  int line = 1;
  std::string message;
};

std::string_view KindName(DiagKind kind);

// Empty iff the program parses and passes every static rule. A parse failure
// yields exactly one parse-error diagnostic. Sorted by (line, kind).
std::vector<CompileDiagnostic> Check(const lang::SourceProgram& program);

// Line of the first diagnostic, clamped into [1, line_count] so that
// end-of-input parse errors stay patchable.
int FirstCeLocation(const std::vector<CompileDiagnostic>& diagnostics, int line_count);

// "[CE] line <n>: <kind>: <message>"
std::string Render(const CompileDiagnostic& diagnostic);

}  // namespace iterfix::check

#endif  // ITERFIX_CHECK_CHECKER_H_

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

#ifndef ITERFIX_GEN_CONTEXT_H_
#define ITERFIX_GEN_CONTEXT_H_

#include <string>
#include <string_view>
#include <vector>

#include "lang/scope.h"
#include "lang/source.h"

namespace iterfix::gen {

inline constexpr int kContextRadius = 5;

// Everything a generator sees for one buggy location.
struct RepairContext {
  lang::SourceProgram source;
  int target_line = 1;
  std::string diagnostic;  // starts with [CE] or [FE]
  std::vector<std::string> context_window;
  lang::Scope in_scope_vars;  // empty when the source does not parse
};

RepairContext MakeContext(const lang::SourceProgram& source, int target_line,
                          std::string diagnostic);

// Coarse key the model is indexed by: parse-error, undefined-variable,
// type-mismatch, arity-mismatch, other-ce, fe-assert-fail, fe-runtime-error,
// fe-timeout.
std::string DiagClass(std::string_view diagnostic);

bool IsCompileDiagnostic(std::string_view diagnostic);

}  // namespace iterfix::gen

#endif  // ITERFIX_GEN_CONTEXT_H_

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

#ifndef ITERFIX_EXEC_VALIDATE_H_
#define ITERFIX_EXEC_VALIDATE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "check/checker.h"
#include "exec/runner.h"
#include "lang/source.h"

namespace iterfix::exec {

enum class StateKind { kCompileError, kFunctionalError, kPlausible };

// "CE", "FE" or "PLAUSIBLE".
std::string_view KindLabel(StateKind kind);

struct Validation {
  StateKind kind = StateKind::kPlausible;
  std::vector<check::CompileDiagnostic> diagnostics;
  // Present iff the program checked cleanly and the suite ran.
  std::optional<TestReport> report;
  std::string diagnostic;  // rendered [CE]/[FE] line; empty when plausible

  std::optional<int> failing() const {
    if (!report) return std::nullopt;
    return report->failing;
  }
};

// Compiler + test suite in one step: the suite only runs on programs that
// pass the checker.
Validation Validate(const lang::SourceProgram& program, const TestSuite& suite,
                    int64_t step_budget = kDefaultStepBudget, int threads = 0);

// "[FE] <first-status> <failing>/<total> failing: t1, t3 | t1: <detail>"
// where first-status is assert-fail, runtime-error or timeout.
std::string RenderFailures(const TestReport& report);

}  // namespace iterfix::exec

#endif  // ITERFIX_EXEC_VALIDATE_H_

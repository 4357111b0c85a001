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

#include "exec/validate.h"

namespace iterfix::exec {

std::string_view KindLabel(StateKind kind) {
  switch (kind) {
    case StateKind::kCompileError: return "CE";
    case StateKind::kFunctionalError: return "FE";
    case StateKind::kPlausible: return "PLAUSIBLE";
  }
  return "?";
}

std::string RenderFailures(const TestReport& report) {
  const TestResult* first = nullptr;
  std::string names;
  for (const TestResult& r : report.results) {
    if (r.outcome.status == TestStatus::kPass) continue;
    if (first == nullptr) first = &r;
    if (!names.empty()) names += ", ";
    names += r.name;
  }
  if (first == nullptr) return "";
  std::string status = first->outcome.status == TestStatus::kFail
                           ? "assert-fail"
                           : std::string(StatusName(first->outcome.status));
  return "[FE] " + status + " " + std::to_string(report.failing) + "/" +
         std::to_string(report.total()) + " failing: " + names + " | " + first->name +
         ": " + first->outcome.detail;
}

Validation Validate(const lang::SourceProgram& program, const TestSuite& suite,
                    int64_t step_budget, int threads) {
  Validation v;
  v.diagnostics = check::Check(program);
  if (!v.diagnostics.empty()) {
    v.kind = StateKind::kCompileError;
    v.diagnostic = check::Render(v.diagnostics.front());
    return v;
  }
  v.report = RunSuite(program, suite, step_budget, threads);
  if (v.report->failing == 0) {
    v.kind = StateKind::kPlausible;
  } else {
    v.kind = StateKind::kFunctionalError;
    v.diagnostic = RenderFailures(*v.report);
  }
  return v;
}

}  // namespace iterfix::exec

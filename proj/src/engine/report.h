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

#ifndef ITERFIX_ENGINE_REPORT_H_
#define ITERFIX_ENGINE_REPORT_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "engine/engine.h"

namespace iterfix::engine {

struct Report {
  int traces = 0;
  int repaired = 0;  // traces with a nonempty pool
  std::map<int, int> plausible_by_depth;
  std::map<std::string, int> paths;  // evolution path -> pooled patches
  int fl_runs = 0;
  int fl_reexecutions = 0;  // runs at patched states
  int states = 0;
  double elapsed_ms = 0.0;  // wall clock, not part of the deterministic output

  bool operator==(const Report& other) const = default;
};

void Accumulate(Report& report, const RepairTrace& trace);

// Fixed-width table: totals, plausible patches per iteration, the seven
// labelled path rows (zeros included), then any longer paths.
std::string ReportToText(const Report& report);

// {"traces", "repaired", "plausible", "plausible_by_depth", "paths": [{"label", "path",
// "count", "share"}], "fl_runs", "fl_reexecutions", "states",
// "nondeterministic": {"elapsed_ms"}}
std::string ReportToJson(const Report& report);
Report ReportFromJson(std::string_view json_text);  // throws InputError

}  // namespace iterfix::engine

#endif  // ITERFIX_ENGINE_REPORT_H_

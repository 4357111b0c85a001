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

#ifndef ITERFIX_ENGINE_TRACE_H_
#define ITERFIX_ENGINE_TRACE_H_

#include <string>
#include <string_view>

#include "engine/engine.h"

namespace iterfix::engine {

inline constexpr std::string_view kTraceFormat = "iterfix-trace/1";

// Pretty-printed JSON. `manifest_json`, when nonempty, must be a JSON object
// and is embedded as "manifest"; the elapsed time is added under its
// "nondeterministic" member.
std::string TraceToJson(const RepairTrace& trace, std::string_view manifest_json = "");

// Rebuilds a trace, recomputing every state's source by replaying patches
// from the root. Throws InputError on malformed input or a pool entry whose
// diff disagrees with its chain.
RepairTrace TraceFromJson(std::string_view json_text);

// Problems with the fault localization gate, one line each; empty when every
// state's fl_snapshot matches "no list yet on this branch, or failing
// dropped below the count at the last localization".
std::vector<std::string> CheckFlGate(const RepairTrace& trace);

// Location tree bound: at relative depth j at most k^j states, and at most
// sum_{j=1..max_iter} k^j per tree. Returns one line per violation.
std::vector<std::string> CheckTreeBounds(const RepairTrace& trace);

}  // namespace iterfix::engine

#endif  // ITERFIX_ENGINE_TRACE_H_

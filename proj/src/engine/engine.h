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

#ifndef ITERFIX_ENGINE_ENGINE_H_
#define ITERFIX_ENGINE_ENGINE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exec/runner.h"
#include "exec/validate.h"
#include "faultloc/ochiai.h"
#include "gen/model.h"
#include "gen/patch.h"
#include "lang/source.h"

namespace iterfix::engine {

enum class StopPolicy { kCollectAll, kFirstPlausible };

std::string_view StopPolicyName(StopPolicy policy);
StopPolicy StopPolicyFromName(std::string_view name);  // throws InputError

struct EngineConfig {
  int k = 2;
  int max_iter = 3;
  int top_n = faultloc::kDefaultTopN;
  int64_t step_budget = exec::kDefaultStepBudget;
  uint64_t seed = 42;
  StopPolicy stop_policy = StopPolicy::kCollectAll;
  bool prune_worsening = false;
  int threads = 0;

  void Validate() const;  // throws InputError
};

struct RepairState {
  int id = 0;
  int parent = -1;
  int depth = 0;
  lang::SourceProgram source;
  exec::StateKind kind = exec::StateKind::kFunctionalError;
  // For CE states: the count of the nearest compilable ancestor, or the
  // suite size at a CE root.
  int failing = 0;
  std::string diagnostic;
  std::optional<gen::CandidatePatch> patch;
  int patch_location = 0;  // line the parent expanded to produce this state
  std::optional<std::vector<faultloc::SuspiciousLocation>> fl_snapshot;
  std::vector<int> locations;  // lines this state was expanded at
  bool expanded = false;
  int tree = -1;        // location tree this state belongs to (-1 at the root)
  int tree_depth = 0;   // depth inside that tree
};

struct PlausibleEntry {
  std::vector<int> chain;  // state ids from the first patched state to the plausible one
  std::string path;
};

struct RepairTrace {
  EngineConfig config;
  std::vector<RepairState> states;  // states[0] is the root; ids index this vector
  std::vector<PlausibleEntry> pool;
  int fl_runs = 0;
  int duplicates = 0;   // candidates skipped because their text was already explored
  double elapsed_ms = 0.0;

  const RepairState& root() const { return states.front(); }
  // Ids from the first patched state down to `id`.
  std::vector<int> Chain(int id) const;
};

struct Classification {
  exec::StateKind kind;
  int failing = 0;
  std::string diagnostic;
  exec::Validation validation;
};

// Throws InputError on an empty suite. `inherited_failing` is used for CE.
Classification Classify(const lang::SourceProgram& source, const exec::TestSuite& suite,
                        const EngineConfig& config, int inherited_failing);

// CE: the first compile error line. FE: the ranked fault localization lines.
std::vector<int> DeriveLocations(const RepairState& state, const exec::Validation& validation,
                                 const EngineConfig& config);

// Depth-first search over chained partial patches. Throws InputError for an
// empty suite or an input that is already plausible.
RepairTrace IterRepair(const lang::SourceProgram& program, const exec::TestSuite& suite,
                       const EngineConfig& config, const gen::GeneratorModel& model);

// Kinds of every state in the chain but the last joined by "->", then
// "plausible". Throws ContractError unless only the last kind is plausible.
std::string EvolutionPath(const std::vector<exec::StateKind>& chain);

// "P1".."P7" for the paths of length at most three, empty otherwise.
std::string PathLabel(std::string_view path);

// Replays a pool entry's patches on the root source.
lang::SourceProgram Replay(const RepairTrace& trace, const PlausibleEntry& entry);

}  // namespace iterfix::engine

#endif  // ITERFIX_ENGINE_ENGINE_H_

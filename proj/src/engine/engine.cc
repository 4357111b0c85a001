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

#include "engine/engine.h"

#include <algorithm>
#include <chrono>
#include <unordered_map>
#include <unordered_set>

#include "check/checker.h"
#include "common/errors.h"
#include "gen/context.h"

namespace iterfix::engine {

std::string_view StopPolicyName(StopPolicy policy) {
  return policy == StopPolicy::kCollectAll ? "collect-all" : "first-plausible";
}

StopPolicy StopPolicyFromName(std::string_view name) {
  if (name == "collect-all") return StopPolicy::kCollectAll;
  if (name == "first-plausible") return StopPolicy::kFirstPlausible;
  throw InputError("unknown stop policy: " + std::string(name));
}

void EngineConfig::Validate() const {
  if (k < 1) throw InputError("k must be at least 1");
  if (max_iter < 1) throw InputError("max-iter must be at least 1");
  if (top_n < 1) throw InputError("top must be at least 1");
  if (step_budget < 1) throw InputError("step budget must be positive");
  if (threads < 0) throw InputError("threads must be nonnegative");
}

std::vector<int> RepairTrace::Chain(int id) const {
  std::vector<int> chain;
  for (int cur = id; cur > 0; cur = states.at(cur).parent) chain.push_back(cur);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

Classification Classify(const lang::SourceProgram& source, const exec::TestSuite& suite,
                        const EngineConfig& config, int inherited_failing) {
  if (suite.tests.empty()) throw InputError("test suite is empty");
  Classification c{exec::StateKind::kPlausible, 0, "",
                   exec::Validate(source, suite, config.step_budget, config.threads)};
  c.kind = c.validation.kind;
  c.diagnostic = c.validation.diagnostic;
  c.failing = c.validation.failing().value_or(inherited_failing);
  return c;
}

std::vector<int> DeriveLocations(const RepairState& state, const exec::Validation& validation,
                                 const EngineConfig& config) {
  if (state.kind == exec::StateKind::kPlausible) {
    throw ContractError("no locations for a plausible state");
  }
  if (state.kind == exec::StateKind::kCompileError) {
    return {check::FirstCeLocation(validation.diagnostics, state.source.line_count())};
  }
  std::vector<int> lines;
  for (const faultloc::SuspiciousLocation& loc :
       faultloc::Rank(*validation.report, lang::ExecutableLines(state.source.ast()),
                      config.top_n)) {
    lines.push_back(loc.line);
  }
  return lines;
}

namespace {

// Per-branch values handed from a state to its children.
struct Branch {
  bool located = false;  // an FL list exists on this branch
  int governing = 0;     // failing count at the last FL run
  int inherited = 0;     // line the parent expanded
  int tree = -1;
  int tree_depth = 0;
};

class Search {
 public:
  Search(const exec::TestSuite& suite, const EngineConfig& config,
         const gen::GeneratorModel& model, RepairTrace& trace)
      : suite_(suite), config_(config), model_(model), trace_(trace) {}

  void Run(const exec::Validation& root_validation, int root_failing) {
    min_depth_[trace_.states[0].source.text()] = 0;
    Visit(0, Branch{false, root_failing, 0, -1, 0}, root_validation, true);
  }

 private:
  void Visit(int id, Branch branch, const exec::Validation& validation, bool expand) {
    RepairState& state = trace_.states[id];
    if (state.kind == exec::StateKind::kPlausible) {
      trace_.pool.push_back(PlausibleEntry{trace_.Chain(id), ""});
      std::vector<exec::StateKind> kinds;
      for (int c : trace_.pool.back().chain) kinds.push_back(trace_.states[c].kind);
      trace_.pool.back().path = EvolutionPath(kinds);
      if (config_.stop_policy == StopPolicy::kFirstPlausible) stopped_ = true;
      return;
    }

    std::vector<int> locations;
    bool continues_tree = false;
    if (state.kind == exec::StateKind::kFunctionalError &&
        (!branch.located || state.failing < branch.governing)) {
      state.fl_snapshot = faultloc::Rank(*validation.report,
                                         lang::ExecutableLines(state.source.ast()),
                                         config_.top_n);
      ++trace_.fl_runs;
      branch.located = true;
      branch.governing = state.failing;
      for (const faultloc::SuspiciousLocation& loc : *state.fl_snapshot) {
        locations.push_back(loc.line);
      }
    } else if (state.kind == exec::StateKind::kFunctionalError) {
      locations = {std::clamp(branch.inherited, 1, state.source.line_count())};
      continues_tree = branch.tree >= 0;
    } else {
      locations = DeriveLocations(state, validation, config_);
      continues_tree = branch.tree >= 0 && locations.front() == branch.inherited;
    }

    if (!expand || state.depth >= config_.max_iter || stopped_) return;
    state.locations = locations;
    state.expanded = true;

    const int depth = state.depth;
    const int failing = state.failing;
    const exec::StateKind kind = state.kind;
    const lang::SourceProgram source = state.source;
    const std::string diagnostic = state.diagnostic;

    for (int line : locations) {
      if (stopped_) return;
      int tree = continues_tree ? branch.tree : next_tree_++;
      int tree_depth = continues_tree ? branch.tree_depth : 0;
      gen::RepairContext ctx = gen::MakeContext(source, line, diagnostic);
      // The whole beam is validated and recorded before any child is
      // expanded, so a sibling reaching a text first claims the shallower depth.
      std::vector<std::pair<int, bool>> children;  // state id, expand
      for (const gen::CandidatePatch& patch : gen::Generate(model_, ctx, config_.k)) {
        lang::SourceProgram child_source = gen::ApplyPatch(source, patch);
        const std::string key = child_source.text();
        auto seen = min_depth_.find(key);
        if (seen != min_depth_.end() &&
            (seen->second <= depth + 1 || pooled_.count(key) > 0)) {
          ++trace_.duplicates;
          continue;
        }
        min_depth_[key] = depth + 1;
        const exec::Validation& v = ValidateCached(child_source);
        if (v.kind == exec::StateKind::kPlausible) pooled_.insert(key);

        RepairState child;
        child.id = static_cast<int>(trace_.states.size());
        child.parent = id;
        child.depth = depth + 1;
        child.source = std::move(child_source);
        child.kind = v.kind;
        child.failing = v.failing().value_or(failing);
        child.diagnostic = v.diagnostic;
        child.patch = patch;
        child.patch_location = line;
        child.tree = tree;
        child.tree_depth = tree_depth + 1;
        bool expand_child = !(config_.prune_worsening &&
                              kind == exec::StateKind::kFunctionalError &&
                              v.kind == exec::StateKind::kFunctionalError &&
                              child.failing > failing);
        children.emplace_back(child.id, expand_child);
        trace_.states.push_back(std::move(child));
      }
      for (const auto& [child_id, expand_child] : children) {
        if (stopped_) return;
        const exec::Validation& v = cache_.at(trace_.states[child_id].source.text());
        Visit(child_id, Branch{branch.located, branch.governing, line, tree, tree_depth + 1}, v,
              expand_child);
      }
    }
  }

  const exec::Validation& ValidateCached(const lang::SourceProgram& source) {
    auto it = cache_.find(source.text());
    if (it != cache_.end()) return it->second;
    return cache_
        .emplace(source.text(),
                 exec::Validate(source, suite_, config_.step_budget, config_.threads))
        .first->second;
  }

  const exec::TestSuite& suite_;
  const EngineConfig& config_;
  const gen::GeneratorModel& model_;
  RepairTrace& trace_;
  std::unordered_map<std::string, int> min_depth_;
  std::unordered_set<std::string> pooled_;
  std::unordered_map<std::string, exec::Validation> cache_;
  int next_tree_ = 0;
  bool stopped_ = false;
};

}  // namespace

RepairTrace IterRepair(const lang::SourceProgram& program, const exec::TestSuite& suite,
                       const EngineConfig& config, const gen::GeneratorModel& model) {
  config.Validate();
  auto start = std::chrono::steady_clock::now();
  const int suite_size = static_cast<int>(suite.tests.size());
  Classification root = Classify(program, suite, config, suite_size);
  if (root.kind == exec::StateKind::kPlausible) {
    throw InputError("nothing to repair: the program passes every test");
  }
  RepairTrace trace;
  trace.config = config;
  RepairState state;
  state.source = program;
  state.kind = root.kind;
  state.failing = root.failing;
  state.diagnostic = root.diagnostic;
  trace.states.push_back(std::move(state));

  Search(suite, config, model, trace).Run(root.validation, root.failing);
  trace.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return trace;
}

std::string EvolutionPath(const std::vector<exec::StateKind>& chain) {
  if (chain.empty() || chain.back() != exec::StateKind::kPlausible) {
    throw ContractError("evolution path must end in a plausible state");
  }
  std::string path;
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i] == exec::StateKind::kPlausible) {
      throw ContractError("plausible state inside an evolution path");
    }
    path += exec::KindLabel(chain[i]);
    path += "->";
  }
  return path + "plausible";
}

std::string PathLabel(std::string_view path) {
  static const char* const kRows[] = {
      "plausible",           "CE->plausible",       "FE->plausible",
      "CE->CE->plausible",   "CE->FE->plausible",   "FE->CE->plausible",
      "FE->FE->plausible",
  };
  for (int i = 0; i < 7; ++i) {
    if (path == kRows[i]) return "P" + std::to_string(i + 1);
  }
  return "";
}

lang::SourceProgram Replay(const RepairTrace& trace, const PlausibleEntry& entry) {
  lang::SourceProgram current = trace.root().source;
  for (int id : entry.chain) {
    const RepairState& state = trace.states.at(id);
    if (!state.patch) throw ContractError("state without a patch in a chain");
    current = gen::ApplyPatch(current, *state.patch);
  }
  return current;
}

}  // namespace iterfix::engine

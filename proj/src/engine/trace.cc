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

#include "engine/trace.h"

#include <map>

#include "common/errors.h"
#include "engine/diff.h"
#include "json.hpp"

namespace iterfix::engine {

using nlohmann::json;

namespace {

json PatchJson(const gen::CandidatePatch& patch) {
  return json{{"start_line", patch.start_line},
              {"end_line", patch.end_line},
              {"replacement", patch.replacement},
              {"template_id", patch.template_id},
              {"score", patch.score},
              {"beam_rank", patch.beam_rank}};
}

gen::CandidatePatch PatchFrom(const json& j) {
  gen::CandidatePatch patch;
  patch.start_line = j.at("start_line").get<int>();
  patch.end_line = j.at("end_line").get<int>();
  patch.replacement = j.at("replacement").get<std::vector<std::string>>();
  patch.template_id = j.at("template_id").get<std::string>();
  patch.score = j.at("score").get<double>();
  patch.beam_rank = j.at("beam_rank").get<int>();
  return patch;
}

exec::StateKind KindFrom(const std::string& label) {
  if (label == "CE") return exec::StateKind::kCompileError;
  if (label == "FE") return exec::StateKind::kFunctionalError;
  if (label == "PLAUSIBLE") return exec::StateKind::kPlausible;
  throw InputError("unknown state kind: " + label);
}

long long Power(int base, int exp) {
  long long p = 1;
  for (int i = 0; i < exp; ++i) p *= base;
  return p;
}

}  // namespace

std::string TraceToJson(const RepairTrace& trace, std::string_view manifest_json) {
  const EngineConfig& c = trace.config;
  json out;
  out["format"] = kTraceFormat;
  out["config"] = {{"k", c.k},
                   {"max_iter", c.max_iter},
                   {"top_n", c.top_n},
                   {"step_budget", c.step_budget},
                   {"seed", c.seed},
                   {"stop_policy", StopPolicyName(c.stop_policy)},
                   {"prune_worsening", c.prune_worsening}};
  out["root_source"] = trace.root().source.text();

  json states = json::array();
  for (const RepairState& s : trace.states) {
    json j{{"id", s.id},
           {"parent", s.parent < 0 ? json(nullptr) : json(s.parent)},
           {"depth", s.depth},
           {"kind", exec::KindLabel(s.kind)},
           {"failing", s.failing},
           {"diagnostic", s.diagnostic},
           {"patch", s.patch ? PatchJson(*s.patch) : json(nullptr)},
           {"patch_location", s.patch_location},
           {"locations", s.locations},
           {"expanded", s.expanded},
           {"tree", s.tree},
           {"tree_depth", s.tree_depth}};
    if (s.fl_snapshot) {
      json fl = json::array();
      for (const faultloc::SuspiciousLocation& loc : *s.fl_snapshot) {
        fl.push_back({{"line", loc.line}, {"score", loc.score}, {"rank", loc.rank}});
      }
      j["fl_snapshot"] = fl;
    } else {
      j["fl_snapshot"] = nullptr;
    }
    states.push_back(std::move(j));
  }
  out["states"] = std::move(states);

  json pool = json::array();
  for (const PlausibleEntry& entry : trace.pool) {
    lang::SourceProgram fixed = Replay(trace, entry);
    pool.push_back({{"chain", entry.chain},
                    {"path", entry.path},
                    {"label", PathLabel(entry.path)},
                    {"diff", UnifiedDiff(trace.root().source.lines(), fixed.lines())}});
  }
  out["pool"] = std::move(pool);
  out["stats"] = {{"states", trace.states.size()},
                  {"fl_runs", trace.fl_runs},
                  {"duplicates", trace.duplicates},
                  {"plausible", trace.pool.size()}};
  if (!manifest_json.empty()) {
    json manifest = json::parse(manifest_json, nullptr, false);
    if (manifest.is_discarded() || !manifest.is_object()) {
      throw InputError("manifest must be a JSON object");
    }
    manifest["nondeterministic"]["elapsed_ms"] = trace.elapsed_ms;
    out["manifest"] = std::move(manifest);
  }
  return out.dump(2) + "\n";
}

RepairTrace TraceFromJson(std::string_view json_text) {
  try {
    json in = json::parse(json_text);
    if (in.at("format").get<std::string>() != kTraceFormat) {
      throw InputError("unsupported trace format");
    }
    RepairTrace trace;
    const json& c = in.at("config");
    trace.config.k = c.at("k").get<int>();
    trace.config.max_iter = c.at("max_iter").get<int>();
    trace.config.top_n = c.at("top_n").get<int>();
    trace.config.step_budget = c.at("step_budget").get<int64_t>();
    trace.config.seed = c.at("seed").get<uint64_t>();
    trace.config.stop_policy = StopPolicyFromName(c.at("stop_policy").get<std::string>());
    trace.config.prune_worsening = c.at("prune_worsening").get<bool>();

    lang::SourceProgram root_source(in.at("root_source").get<std::string>());
    for (const json& j : in.at("states")) {
      RepairState s;
      s.id = j.at("id").get<int>();
      if (s.id != static_cast<int>(trace.states.size())) throw InputError("state ids out of order");
      s.parent = j.at("parent").is_null() ? -1 : j.at("parent").get<int>();
      s.depth = j.at("depth").get<int>();
      s.kind = KindFrom(j.at("kind").get<std::string>());
      s.failing = j.at("failing").get<int>();
      s.diagnostic = j.at("diagnostic").get<std::string>();
      s.patch_location = j.at("patch_location").get<int>();
      s.locations = j.at("locations").get<std::vector<int>>();
      s.expanded = j.at("expanded").get<bool>();
      s.tree = j.at("tree").get<int>();
      s.tree_depth = j.at("tree_depth").get<int>();
      if (!j.at("fl_snapshot").is_null()) {
        std::vector<faultloc::SuspiciousLocation> fl;
        for (const json& loc : j.at("fl_snapshot")) {
          fl.push_back({loc.at("line").get<int>(), loc.at("score").get<double>(),
                        loc.at("rank").get<int>()});
        }
        s.fl_snapshot = std::move(fl);
      }
      if (s.parent < 0) {
        if (s.id != 0) throw InputError("only the first state may be the root");
        s.source = root_source;
      } else {
        if (s.parent >= s.id || j.at("patch").is_null()) throw InputError("bad state parent");
        s.patch = PatchFrom(j.at("patch"));
        s.source = gen::ApplyPatch(trace.states[s.parent].source, *s.patch);
      }
      trace.states.push_back(std::move(s));
    }
    if (trace.states.empty()) throw InputError("trace has no states");
    for (const json& j : in.at("pool")) {
      PlausibleEntry entry{j.at("chain").get<std::vector<int>>(), j.at("path").get<std::string>()};
      for (int id : entry.chain) {
        if (id <= 0 || id >= static_cast<int>(trace.states.size())) {
          throw InputError("pool chain references an unknown state");
        }
      }
      if (entry.chain.empty() || trace.Chain(entry.chain.back()) != entry.chain) {
        throw InputError("pool chain is not a root path");
      }
      std::vector<std::string> applied = ApplyUnifiedDiff(
          trace.root().source.lines(), j.at("diff").get<std::string>());
      if (applied != Replay(trace, entry).lines()) {
        throw InputError("pool diff disagrees with its patch chain");
      }
      trace.pool.push_back(std::move(entry));
    }
    const json& stats = in.at("stats");
    trace.fl_runs = stats.at("fl_runs").get<int>();
    trace.duplicates = stats.at("duplicates").get<int>();
    if (in.contains("manifest") && in["manifest"].contains("nondeterministic")) {
      trace.elapsed_ms = in["manifest"]["nondeterministic"].value("elapsed_ms", 0.0);
    }
    return trace;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed trace: ") + e.what());
  } catch (const ContractError& e) {
    throw InputError(std::string("malformed trace: ") + e.what());
  }
}

std::vector<std::string> CheckFlGate(const RepairTrace& trace) {
  std::vector<std::string> problems;
  for (const RepairState& s : trace.states) {
    bool located = false;
    int governing = 0;
    bool expected = false;
    // Walk root to s, recomputing the gate at every compilable state.
    std::vector<int> path = trace.Chain(s.id);
    path.insert(path.begin(), 0);
    for (int id : path) {
      const RepairState& t = trace.states[id];
      expected = t.kind == exec::StateKind::kFunctionalError &&
                 (!located || t.failing < governing);
      if (expected) {
        located = true;
        governing = t.failing;
      }
    }
    if (expected != s.fl_snapshot.has_value()) {
      problems.push_back("state " + std::to_string(s.id) + ": fl_snapshot " +
                         (s.fl_snapshot ? "present" : "absent") + ", gate says " +
                         (expected ? "run" : "skip"));
    }
  }
  return problems;
}

std::vector<std::string> CheckTreeBounds(const RepairTrace& trace) {
  std::map<int, std::map<int, long long>> per_tree;
  for (const RepairState& s : trace.states) {
    if (s.tree >= 0) ++per_tree[s.tree][s.tree_depth];
  }
  const int k = trace.config.k;
  long long total_bound = 0;
  for (int j = 1; j <= trace.config.max_iter; ++j) total_bound += Power(k, j);
  std::vector<std::string> problems;
  for (const auto& [tree, depths] : per_tree) {
    long long total = 0;
    for (const auto& [depth, count] : depths) {
      total += count;
      if (depth < 1 || depth > trace.config.max_iter || count > Power(k, depth)) {
        problems.push_back("tree " + std::to_string(tree) + " depth " + std::to_string(depth) +
                           ": " + std::to_string(count) + " states");
      }
    }
    if (total > total_bound) {
      problems.push_back("tree " + std::to_string(tree) + ": " + std::to_string(total) +
                         " states, bound " + std::to_string(total_bound));
    }
  }
  return problems;
}

}  // namespace iterfix::engine

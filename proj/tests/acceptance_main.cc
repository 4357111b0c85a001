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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "check/checker.h"
#include "common/io.h"
#include "engine/engine.h"
#include "engine/report.h"
#include "engine/trace.h"
#include "exec/validate.h"
#include "faultloc/ochiai.h"
#include "gen/context.h"
#include "gen/patch.h"
#include "gen/templates.h"
#include "json.hpp"
#include "perturb/corpus.h"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace iterfix;

namespace {

// Pinned tolerances and budgets.
constexpr double kScoreTolerance = 1e-9;
constexpr double kOchiaiSeconds = 10.0;
constexpr double kMultiLocationSeconds = 600.0;
constexpr int kOchiaiSamples = 1000;
constexpr int kBoundBugs = 20;
constexpr int kMinTwoLocationBugs = 30;
constexpr int kFuzzInputs = 10000;
constexpr size_t kFuzzMaxBytes = 1024;
constexpr uint64_t kSeed = 42;

const std::string kFixtures = ITERFIX_FIXTURES;
const std::string kCli = ITERFIX_CLI;
const std::string kWork = ITERFIX_WORK;

int failures = 0;
std::map<int, std::string> lines;  // criterion -> result line

void Report(int id, const std::string& name, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  lines[id] = std::string(pass ? "PASS" : "FAIL") + "  " + std::to_string(id) + "  " + name +
              "  " + detail;
}

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

int Run(const std::string& command) {
  int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Quote(const std::string& s) { return "'" + s + "'"; }

// Drops every "nondeterministic" member at any depth.
json Stable(json j) {
  if (j.is_object()) {
    j.erase("nondeterministic");
    for (auto& [key, value] : j.items()) value = Stable(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = Stable(value);
  }
  return j;
}

std::string StableFile(const fs::path& path) {
  std::string text = ReadFile(path.string());
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) return text;
  return Stable(j).dump(2);
}

// ---- pipeline -----------------------------------------------------------

struct Pipeline {
  fs::path dir;
  bool ok = false;
  std::string log;
};

Pipeline RunPipeline(const std::string& name) {
  Pipeline p;
  p.dir = fs::path(kWork) / name;
  fs::remove_all(p.dir);
  fs::create_directories(p.dir / "traces");
  const std::string d = p.dir.string();
  const std::vector<std::string> steps = {
      Quote(kCli) + " corpus generate --programs " + Quote(kFixtures + "/programs") +
          " --seed 42 --out " + Quote(d + "/corpus.jsonl") + " > " + Quote(d + "/corpus.log"),
      Quote(kCli) + " train --corpus " + Quote(d + "/corpus.jsonl") + " --seed 42 --out " +
          Quote(d + "/model.json") + " --augmented-out " + Quote(d + "/s.jsonl") + " > " +
          Quote(d + "/growth.txt"),
      Quote(kCli) + " repair --corpus " + Quote(d + "/corpus.jsonl") + " --model " +
          Quote(d + "/model.json") + " --seed 42 --out-dir " + Quote(d + "/traces") + " > " +
          Quote(d + "/repair.log"),
      Quote(kCli) + " report " + Quote(d + "/traces") + " --json " + Quote(d + "/report.json") +
          " > " + Quote(d + "/report.txt") + " 2> " + Quote(d + "/report.err"),
  };
  p.ok = true;
  for (const std::string& step : steps) {
    int code = Run(step);
    // Batch repair exits 1 only when nothing at all was repaired.
    if (code != 0) {
      p.ok = false;
      p.log += "exit " + std::to_string(code) + ": " + step + "\n";
    }
  }
  return p;
}

std::vector<fs::path> TraceFiles(const fs::path& dir) {
  std::vector<fs::path> files;
  if (!fs::is_directory(dir)) return files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

// ---- criterion 1 --------------------------------------------------------

exec::TestResult Result(bool passed, std::set<int> coverage) {
  exec::TestResult r;
  r.outcome.status = passed ? exec::TestStatus::kPass : exec::TestStatus::kFail;
  r.coverage = std::move(coverage);
  return r;
}

void OchiaiOracle() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(kSeed);
  int mismatches = 0;
  double worst = 0.0;
  for (int sample = 0; sample < kOchiaiSamples; ++sample) {
    int lines = 1 + static_cast<int>(rng() % 30);
    int tests = 1 + static_cast<int>(rng() % 10);
    std::vector<std::vector<bool>> covers(tests, std::vector<bool>(lines + 1, false));
    std::vector<bool> passed(tests);
    exec::TestReport report;
    for (int t = 0; t < tests; ++t) {
      passed[t] = t > 0 && rng() % 2 == 0;
      std::set<int> cov;
      for (int l = 1; l <= lines; ++l) {
        if (rng() % 3 == 0) {
          covers[t][l] = true;
          cov.insert(l);
        }
      }
      report.results.push_back(Result(passed[t], cov));
      report.failing += passed[t] ? 0 : 1;
    }
    std::set<int> executable;
    for (int l = 1; l <= lines; ++l) executable.insert(l);

    // Brute force from the membership matrix.
    struct Scored {
      int line;
      double score;
    };
    std::vector<Scored> want;
    int total_failing = 0;
    for (int t = 0; t < tests; ++t) total_failing += passed[t] ? 0 : 1;
    for (int l = 1; l <= lines; ++l) {
      int ef = 0, ep = 0;
      for (int t = 0; t < tests; ++t) {
        if (covers[t][l]) (passed[t] ? ep : ef) += 1;
      }
      if (ef > 0) want.push_back({l, ef / std::sqrt(static_cast<double>(total_failing) * (ef + ep))});
    }
    std::sort(want.begin(), want.end(), [](const Scored& a, const Scored& b) {
      if (std::fabs(a.score - b.score) > 1e-12) return a.score > b.score;
      return a.line < b.line;
    });
    if (want.size() > 50) want.resize(50);

    auto got = faultloc::Rank(report, executable);
    if (got.size() != want.size()) {
      ++mismatches;
      continue;
    }
    for (size_t i = 0; i < got.size(); ++i) {
      double diff = std::fabs(got[i].score - want[i].score);
      worst = std::max(worst, diff);
      if (got[i].line != want[i].line || got[i].rank != static_cast<int>(i) + 1 ||
          diff > kScoreTolerance) {
        ++mismatches;
        break;
      }
    }
  }
  double elapsed = Seconds(start);
  std::ostringstream detail;
  detail << kOchiaiSamples << " spectra, " << mismatches << " mismatches, max |dscore| "
         << worst << ", " << elapsed << " s (limit " << kOchiaiSeconds << " s)";
  Report(1, "ochiai-oracle", mismatches == 0 && elapsed < kOchiaiSeconds, detail.str());
}

// ---- criterion 2 --------------------------------------------------------

// Counts bound violations per location tree. A tree starts at a (state,
// location) expansion; a child continues it when it belongs to the same tree.
int BoundViolations(const engine::RepairTrace& trace, int k, int max_iter,
                    std::string* first) {
  int violations = 0;
  auto fail = [&](const std::string& what) {
    if (violations++ == 0 && first) *first = what;
  };
  std::map<std::pair<int, int>, int> fanout;
  std::map<int, std::map<int, long>> per_depth;  // tree -> depth -> states
  for (const engine::RepairState& s : trace.states) {
    if (s.parent < 0) continue;
    const engine::RepairState& parent = trace.states[s.parent];
    if (s.depth != parent.depth + 1) fail("depth gap at state " + std::to_string(s.id));
    if (s.depth > max_iter) fail("state " + std::to_string(s.id) + " beyond MAX");
    int expected = parent.tree == s.tree ? parent.tree_depth + 1 : 1;
    if (s.tree_depth != expected) fail("tree depth mismatch at state " + std::to_string(s.id));
    ++fanout[{s.parent, s.patch_location}];
    ++per_depth[s.tree][s.tree_depth];
  }
  for (const auto& [key, n] : fanout) {
    if (n > k) fail("fanout " + std::to_string(n) + " at state " + std::to_string(key.first));
  }
  long total_limit = 0;
  for (int j = 1; j <= max_iter; ++j) total_limit += std::lround(std::pow(k, j));
  for (const auto& [tree, depths] : per_depth) {
    long total = 0;
    for (const auto& [j, n] : depths) {
      total += n;
      if (n > std::lround(std::pow(k, j))) {
        fail("tree " + std::to_string(tree) + " depth " + std::to_string(j) + " has " +
             std::to_string(n));
      }
    }
    if (total > total_limit) fail("tree " + std::to_string(tree) + " total " + std::to_string(total));
  }
  return violations;
}

void BeamBound(const std::vector<perturb::CorpusSample>& corpus,
               const gen::GeneratorModel& model) {
  std::vector<const perturb::CorpusSample*> bugs;
  size_t stride = std::max<size_t>(1, corpus.size() / kBoundBugs);
  for (size_t i = 0; i < corpus.size() && static_cast<int>(bugs.size()) < kBoundBugs; i += stride) {
    bugs.push_back(&corpus[i]);
  }
  int violations = 0, runs = 0;
  long states = 0;
  std::string first;
  for (int k = 1; k <= 3; ++k) {
    for (int max_iter = 1; max_iter <= 3; ++max_iter) {
      engine::EngineConfig config;
      config.k = k;
      config.max_iter = max_iter;
      for (const perturb::CorpusSample* s : bugs) {
        engine::RepairTrace trace = engine::IterRepair(s->buggy, *s->suite, config, model);
        violations += BoundViolations(trace, k, max_iter, first.empty() ? &first : nullptr);
        states += static_cast<long>(trace.states.size());
        ++runs;
      }
    }
  }
  std::ostringstream detail;
  detail << runs << " runs over " << bugs.size() << " bugs, k and MAX in {1,2,3}, " << states
         << " states, " << violations << " violations";
  if (!first.empty()) detail << " (first: " << first << ")";
  Report(2, "beam-bound", violations == 0 && static_cast<int>(bugs.size()) == kBoundBugs,
         detail.str());
}

// ---- criterion 3 --------------------------------------------------------

// Replays the re-localization rule from the root: a compilable failing state
// runs FL iff no list exists yet on its branch or its failing count is below
// the count at the last FL run.
int GateViolations(const engine::RepairTrace& trace, const exec::TestSuite* suite,
                   std::string* first) {
  struct Gate {
    bool located;
    int governing;
  };
  int violations = 0;
  std::vector<Gate> after(trace.states.size());
  for (const engine::RepairState& s : trace.states) {
    Gate in = s.parent < 0 ? Gate{false, s.failing} : after[s.parent];
    bool runs = s.kind == exec::StateKind::kFunctionalError &&
                (!in.located || s.failing < in.governing);
    if (runs != s.fl_snapshot.has_value()) {
      if (violations++ == 0 && first) {
        *first = "state " + std::to_string(s.id) + (runs ? " lacks" : " has") + " a snapshot";
      }
    }
    if (runs && suite != nullptr) {
      auto ranked = faultloc::Rank(exec::RunSuite(s.source, *suite),
                                   lang::ExecutableLines(s.source.ast()), trace.config.top_n);
      bool same = ranked.size() == s.fl_snapshot->size();
      for (size_t i = 0; same && i < ranked.size(); ++i) {
        same = ranked[i].line == (*s.fl_snapshot)[i].line &&
               std::fabs(ranked[i].score - (*s.fl_snapshot)[i].score) <= kScoreTolerance;
      }
      if (!same && violations++ == 0 && first) {
        *first = "state " + std::to_string(s.id) + " snapshot differs from a fresh ranking";
      }
    }
    after[s.id] = runs ? Gate{true, s.failing} : in;
  }
  return violations;
}

struct LoadedTrace {
  std::string name;
  engine::RepairTrace trace;
  std::shared_ptr<const exec::TestSuite> suite;
};

void FlGate(const std::vector<LoadedTrace>& traces, bool pipeline_ok) {
  int violations = 0, snapshots = 0, reruns = 0;
  std::string first;
  for (const LoadedTrace& t : traces) {
    std::string where;
    int v = GateViolations(t.trace, t.suite.get(), &where);
    if (v > 0 && first.empty()) first = t.name + ": " + where;
    violations += v;
    for (const auto& s : t.trace.states) {
      if (!s.fl_snapshot) continue;
      ++snapshots;
      if (s.parent >= 0) ++reruns;
    }
  }
  std::ostringstream detail;
  detail << traces.size() << " traces, " << snapshots << " snapshots (" << reruns
         << " re-executions), " << violations << " violations";
  if (!first.empty()) detail << " (first: " << first << ")";
  Report(3, "fl-gate", pipeline_ok && !traces.empty() && violations == 0 && reruns > 0,
         detail.str());
}

// ---- criterion 4 --------------------------------------------------------

// True when some single edit produced by any template at any line is plausible.
bool SingleEditFixExists(const perturb::CorpusSample& s) {
  std::set<std::string> diagnostics = {s.diagnostic, "[FE] probe: expected 0 got 1"};
  for (int line = 1; line <= s.buggy.line_count(); ++line) {
    for (const std::string& diagnostic : diagnostics) {
      gen::RepairContext ctx = gen::MakeContext(s.buggy, line, diagnostic);
      for (const gen::CandidatePatch& patch : gen::EnumerateCandidates(ctx)) {
        lang::SourceProgram edited = gen::ApplyPatch(s.buggy, patch);
        if (exec::Validate(edited, *s.suite).kind == exec::StateKind::kPlausible) return true;
      }
    }
  }
  return false;
}

// A pooled chain editing two distinct lines with FL re-run at an
// intermediate state.
bool IsMultiLocationChain(const engine::RepairTrace& trace, const engine::PlausibleEntry& e) {
  std::set<int> lines;
  for (int id : e.chain) lines.insert(trace.states[id].patch->start_line);
  if (lines.size() < 2) return false;
  for (size_t i = 0; i + 1 < e.chain.size(); ++i) {
    if (trace.states[e.chain[i]].fl_snapshot) return true;
  }
  return false;
}

void MultiLocation(const gen::GeneratorModel& model, std::vector<LoadedTrace>* out) {
  auto start = std::chrono::steady_clock::now();
  auto corpus = perturb::FromJsonLines(ReadFile(kFixtures + "/corpus/two_location.jsonl"));
  std::set<std::string> shallow, deep;
  std::string witness;
  int witness_checked = 0;
  for (const perturb::CorpusSample& s : corpus) {
    engine::EngineConfig config;
    config.max_iter = 1;
    if (!engine::IterRepair(s.buggy, *s.suite, config, model).pool.empty()) shallow.insert(s.id);
    config.max_iter = 3;
    engine::RepairTrace trace = engine::IterRepair(s.buggy, *s.suite, config, model);
    if (!trace.pool.empty()) deep.insert(s.id);
    if (witness.empty()) {
      for (const engine::PlausibleEntry& e : trace.pool) {
        if (!IsMultiLocationChain(trace, e)) continue;
        ++witness_checked;
        if (!SingleEditFixExists(s)) witness = s.id + " via " + e.path;
        break;
      }
    }
    out->push_back({"two_location/" + s.id, std::move(trace), s.suite});
  }
  bool superset = std::includes(deep.begin(), deep.end(), shallow.begin(), shallow.end());
  bool strict = superset && deep.size() > shallow.size();
  double elapsed = Seconds(start);
  std::ostringstream detail;
  detail << corpus.size() << " two-location bugs, MAX=1 repairs " << shallow.size()
         << ", MAX=3 repairs " << deep.size() << (strict ? " (strict superset)" : " (NOT a strict superset)")
         << ", witness " << (witness.empty() ? "none" : witness) << ", " << elapsed
         << " s (limit " << kMultiLocationSeconds << " s)";
  Report(4, "multi-location",
         static_cast<int>(corpus.size()) >= kMinTwoLocationBugs && strict && !witness.empty() &&
             elapsed < kMultiLocationSeconds,
         detail.str());
}

// ---- criteria 5 and 6 ---------------------------------------------------

void CeChain(const std::vector<LoadedTrace>& bug_traces) {
  engine::Report report;
  for (const LoadedTrace& t : bug_traces) engine::Accumulate(report, t.trace);
  const std::regex ce(".*CE->.*plausible");
  std::vector<std::string> found;
  for (const auto& [path, count] : report.paths) {
    if (count > 0 && std::regex_match(path, ce)) found.push_back(path);
  }
  std::ostringstream detail;
  detail << bug_traces.size() << " shipped bugs, CE paths:";
  for (const std::string& p : found) detail << " " << p << "=" << report.paths[p];
  if (found.empty()) detail << " none";
  Report(5, "ce-chain", !found.empty(), detail.str());
}

void PathTaxonomy(const std::vector<const std::vector<LoadedTrace>*>& groups) {
  const std::regex grammar("(CE->|FE->)*plausible");
  int entries = 0, violations = 0;
  std::string first;
  std::set<std::string> labels;
  auto fail = [&](const std::string& what) {
    if (violations++ == 0) first = what;
  };
  for (const auto* group : groups) {
    for (const LoadedTrace& t : *group) {
      for (const engine::PlausibleEntry& e : t.trace.pool) {
        ++entries;
        if (!std::regex_match(e.path, grammar)) fail(t.name + ": path " + e.path);
        std::string label = engine::PathLabel(e.path);
        if (label.empty()) fail(t.name + ": path " + e.path + " outside P1-P7");
        labels.insert(label);
        // Re-apply each patch from the root.
        lang::SourceProgram program = t.trace.root().source;
        for (int id : e.chain) program = gen::ApplyPatch(program, *t.trace.states[id].patch);
        exec::Validation v = exec::Validate(program, *t.suite);
        if (!check::Check(program).empty() || !v.failing() || *v.failing() != 0) {
          fail(t.name + ": chain ending at state " + std::to_string(e.chain.back()) +
               " does not replay to a plausible program");
        }
      }
    }
  }
  std::ostringstream detail;
  detail << entries << " pooled chains, labels";
  for (const std::string& l : labels) detail << " " << l;
  detail << ", " << violations << " violations";
  if (!first.empty()) detail << " (first: " << first << ")";
  Report(6, "path-taxonomy", entries > 0 && violations == 0, detail.str());
}

// ---- criterion 7 --------------------------------------------------------

void TrainingFidelity(const Pipeline& a, const Pipeline& b) {
  int violations = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (violations++ == 0) first = what;
  };
  std::vector<perturb::CorpusSample> s;
  std::vector<std::string> growth_lines;
  try {
    s = perturb::FromJsonLines(ReadFile((a.dir / "s.jsonl").string()));
    std::istringstream growth(ReadFile((a.dir / "growth.txt").string()));
    for (std::string line; std::getline(growth, line);) growth_lines.push_back(line);
  } catch (const std::exception& e) {
    fail(e.what());
  }
  std::map<std::string, const perturb::CorpusSample*> by_id;
  for (const auto& sample : s) by_id[sample.id] = &sample;
  size_t augmented = 0;
  for (const auto& v : s) {
    size_t tilde = v.id.rfind('~');
    if (tilde == std::string::npos) continue;
    ++augmented;
    auto parent = by_id.find(v.id.substr(0, tilde));
    if (parent == by_id.end()) {
      fail(v.id + ": originating pair missing");
      continue;
    }
    std::string key = lang::TokenKey(v.buggy.text());
    if (key == lang::TokenKey(parent->second->buggy.text())) fail(v.id + ": v equals b");
    if (key == lang::TokenKey(v.fixed.text())) fail(v.id + ": v equals f");
  }
  // Rows after the header: iteration, size, added.
  std::vector<long> sizes;
  for (size_t i = 1; i < growth_lines.size(); ++i) {
    std::istringstream row(growth_lines[i]);
    long iteration, size, added;
    if (row >> iteration >> size >> added) sizes.push_back(size);
  }
  bool strict = sizes.size() == 4;
  for (size_t i = 1; strict && i < sizes.size(); ++i) strict = sizes[i] > sizes[i - 1];
  if (!strict) fail("growth is not strictly increasing over 3 iterations");
  if (!sizes.empty() && static_cast<size_t>(sizes.back()) != s.size()) {
    fail("final |S| differs from the augmented corpus size");
  }
  bool identical = ReadFile((a.dir / "growth.txt").string()) ==
                   ReadFile((b.dir / "growth.txt").string());
  if (!identical) fail("growth tables differ between runs");
  std::ostringstream detail;
  detail << "|S| by iteration";
  for (long n : sizes) detail << " " << n;
  detail << ", " << augmented << " augmented pairs checked, growth table "
         << (identical ? "identical" : "differs") << " across runs, " << violations
         << " violations";
  if (!first.empty()) detail << " (first: " << first << ")";
  Report(7, "train-fidelity", a.ok && b.ok && violations == 0, detail.str());
}

// ---- criterion 8 --------------------------------------------------------

void Determinism(const Pipeline& a, const Pipeline& b) {
  std::vector<std::string> differing;
  auto compare = [&](const fs::path& relative) {
    fs::path x = a.dir / relative, y = b.dir / relative;
    if (!fs::exists(x) || !fs::exists(y) || StableFile(x) != StableFile(y)) {
      differing.push_back(relative.string());
    }
  };
  for (const char* f : {"corpus.jsonl", "corpus.jsonl.manifest.json", "model.json",
                        "model.json.manifest.json", "s.jsonl", "growth.txt", "report.txt",
                        "report.json", "repair.log"}) {
    compare(f);
  }
  std::vector<fs::path> ta = TraceFiles(a.dir / "traces"), tb = TraceFiles(b.dir / "traces");
  if (ta.size() != tb.size()) differing.push_back("trace count");
  for (const fs::path& t : ta) compare(fs::path("traces") / t.filename());
  bool matches_shipped = ReadFile((a.dir / "corpus.jsonl").string()) ==
                         ReadFile(kFixtures + "/corpus/corpus.jsonl");
  bool matches_model = fs::exists(a.dir / "model.json") &&
                       ReadFile((a.dir / "model.json").string()) ==
                           ReadFile(kFixtures + "/model/model.json");
  bool matches_golden = fs::exists(a.dir / "report.txt") &&
                        ReadFile((a.dir / "report.txt").string()) ==
                            ReadFile(kFixtures + "/golden/corpus_report.txt");
  std::ostringstream detail;
  detail << ta.size() << " traces plus corpus, model, S, growth, report compared; "
         << differing.size() << " differ";
  if (!differing.empty()) detail << " (first: " << differing.front() << ")";
  detail << "; corpus " << (matches_shipped ? "matches" : "differs from") << " shipped, model "
         << (matches_model ? "matches" : "differs from") << " shipped, report "
         << (matches_golden ? "matches" : "differs from") << " golden";
  if (!a.ok || !b.ok) detail << "; pipeline failed: " << a.log << b.log;
  Report(8, "determinism",
         a.ok && b.ok && !ta.empty() && differing.empty() && matches_shipped && matches_model &&
             matches_golden,
         detail.str());
}

// ---- criterion 9 --------------------------------------------------------

void Fuzz() {
  std::mt19937_64 rng(kSeed);
  std::vector<std::string> seeds;
  for (const auto& e : fs::directory_iterator(kFixtures + "/programs")) {
    if (e.path().extension() == ".mini") seeds.push_back(ReadFile(e.path().string()));
  }
  std::sort(seeds.begin(), seeds.end());
  const std::string alphabet = "fnletifelsewhilereturntruefalseintbool(){}[],;:->=+-*/%<>!&|_ \n\t0123456789abcxyz";
  int parsed = 0, rejected = 0, bad = 0;
  std::string first;
  for (int i = 0; i < kFuzzInputs; ++i) {
    std::string input;
    switch (i % 3) {
      case 0: {  // raw bytes
        size_t n = rng() % (kFuzzMaxBytes + 1);
        for (size_t j = 0; j < n; ++j) input.push_back(static_cast<char>(rng() & 0xFF));
        break;
      }
      case 1: {  // grammar-alphabet soup
        size_t n = rng() % (kFuzzMaxBytes + 1);
        for (size_t j = 0; j < n; ++j) input.push_back(alphabet[rng() % alphabet.size()]);
        break;
      }
      default: {  // a shipped program with a few byte edits
        input = seeds[rng() % seeds.size()];
        int edits = 1 + static_cast<int>(rng() % 4);
        for (int e = 0; e < edits && !input.empty(); ++e) {
          size_t at = rng() % input.size();
          switch (rng() % 3) {
            case 0: input.erase(at, 1); break;
            case 1: input.insert(at, 1, alphabet[rng() % alphabet.size()]); break;
            default: input[at] = alphabet[rng() % alphabet.size()];
          }
        }
        if (input.size() > kFuzzMaxBytes) input.resize(kFuzzMaxBytes);
      }
    }
    try {
      lang::SourceProgram program(input);
      std::vector<check::CompileDiagnostic> diags = check::Check(program);
      if (program.parsed()) {
        ++parsed;
      } else {
        ++rejected;
        const lang::ParseFailure& f = program.failure();
        bool located = f.line >= 1 && f.line <= program.line_count() + 1 && !diags.empty() &&
                       diags.front().kind == check::DiagKind::kParseError;
        if (!located) {
          ++bad;
          if (first.empty()) first = "input " + std::to_string(i) + ": unlocated failure";
        }
      }
      for (const auto& d : diags) {
        if (d.line < 1) {
          ++bad;
          if (first.empty()) first = "input " + std::to_string(i) + ": line " + std::to_string(d.line);
        }
      }
    } catch (const std::exception& e) {
      ++bad;
      if (first.empty()) first = "input " + std::to_string(i) + ": " + e.what();
    }
  }
  std::ostringstream detail;
  detail << kFuzzInputs << " inputs, " << parsed << " parsed, " << rejected
         << " rejected with a located failure, " << bad << " violations";
  if (!first.empty()) detail << " (first: " << first << ")";
  Report(9, "fuzz-totality", bad == 0, detail.str());
}

std::vector<LoadedTrace> LoadPipelineTraces(const Pipeline& p) {
  std::vector<LoadedTrace> out;
  std::map<std::string, std::shared_ptr<const exec::TestSuite>> suites;
  for (const auto& s : perturb::FromJsonLines(ReadFile(kFixtures + "/corpus/corpus.jsonl"))) {
    suites[s.id] = s.suite;
  }
  for (const fs::path& f : TraceFiles(p.dir / "traces")) {
    json j = json::parse(ReadFile(f.string()));
    std::string sample = j["manifest"]["flags"].value("sample", "");
    auto suite = suites.find(sample);
    if (suite == suites.end()) continue;
    out.push_back({f.filename().string(), engine::TraceFromJson(j.dump()), suite->second});
  }
  return out;
}

std::vector<LoadedTrace> RepairShippedBugs(const gen::GeneratorModel& model) {
  const std::vector<std::pair<std::string, std::string>> bugs = {
      {"bugs/ml_norm.mini", "bugs/ml_norm.json"},
      {"bugs/gcd_syntax.mini", "programs/gcd.json"},
      {"bugs/fib_syntax.mini", "programs/fib.json"}};
  std::vector<LoadedTrace> out;
  for (const auto& [program, suite_path] : bugs) {
    auto suite = std::make_shared<exec::TestSuite>(
        exec::ParseSuite(ReadFile(kFixtures + "/" + suite_path)));
    lang::SourceProgram source(ReadSourceFile(kFixtures + "/" + program));
    out.push_back({program, engine::IterRepair(source, *suite, engine::EngineConfig{}, model),
                   suite});
  }
  return out;
}

}  // namespace

int main() {
  try {
    fs::create_directories(kWork);
    Pipeline first = RunPipeline("run1");
    Pipeline second = RunPipeline("run2");
    gen::GeneratorModel model =
        gen::GeneratorModel::FromJson(ReadFile(kFixtures + "/model/model.json"));
    auto corpus = perturb::FromJsonLines(ReadFile(kFixtures + "/corpus/corpus.jsonl"));

    std::vector<LoadedTrace> corpus_traces = LoadPipelineTraces(first);
    std::vector<LoadedTrace> bug_traces = RepairShippedBugs(model);
    std::vector<LoadedTrace> two_location_traces;

    OchiaiOracle();
    BeamBound(corpus, model);
    MultiLocation(model, &two_location_traces);
    std::vector<LoadedTrace> gated = corpus_traces;
    gated.insert(gated.end(), bug_traces.begin(), bug_traces.end());
    gated.insert(gated.end(), two_location_traces.begin(), two_location_traces.end());
    FlGate(gated, first.ok && corpus_traces.size() == corpus.size());
    CeChain(bug_traces);
    PathTaxonomy({&corpus_traces, &bug_traces, &two_location_traces});
    TrainingFidelity(first, second);
    Determinism(first, second);
    Fuzz();
  } catch (const std::exception& e) {
    for (const auto& [id, line] : lines) std::cout << line << "\n";
    std::cout << "FAIL  acceptance aborted: " << e.what() << std::endl;
    return 1;
  }
  for (const auto& [id, line] : lines) std::cout << line << "\n";
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}

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

#ifndef ITERFIX_PERTURB_CORPUS_H_
#define ITERFIX_PERTURB_CORPUS_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "exec/runner.h"
#include "exec/validate.h"
#include "lang/source.h"

namespace iterfix::perturb {

// A correct program and the suite it passes.
struct SeedProgram {
  std::string name;
  lang::SourceProgram program;
  std::shared_ptr<const exec::TestSuite> suite;
};

// One (buggy, fixed) training pair. The suite travels with the sample so a
// corpus file is self-contained.
struct CorpusSample {
  std::string id;
  std::string program;  // seed program name
  lang::SourceProgram buggy;
  lang::SourceProgram fixed;
  std::string op;  // perturbation op id, "+"-joined for composed bugs
  int site_line = 1;
  std::vector<int> site_lines;
  exec::StateKind diag_kind = exec::StateKind::kFunctionalError;  // CE or FE
  std::string diagnostic;
  std::shared_ptr<const exec::TestSuite> suite;
};

struct CorpusOptions {
  int per_program = 20;
  uint64_t seed = 42;
  int locations = 1;  // 1 or 2
  int64_t step_budget = exec::kDefaultStepBudget;
};

struct CorpusStats {
  int generated = 0;  // mutants executed
  int kept = 0;
};

// Perturbs every seed, keeps the mutants that fail to check or fail a test,
// and returns them ordered by (program, op, site). Throws InputError when a
// seed does not check cleanly or fails its own suite.
std::vector<CorpusSample> BuildCorpus(const std::vector<SeedProgram>& seeds,
                                      const CorpusOptions& options,
                                      CorpusStats* stats = nullptr);

// The line a repair would target for this sample: the first compile error
// line for CE samples, the perturbation site for FE samples.
int RepairLine(const CorpusSample& sample);

std::string ToJsonLine(const CorpusSample& sample);
CorpusSample FromJsonLine(std::string_view line);  // throws InputError
std::string ToJsonLines(const std::vector<CorpusSample>& samples);
std::vector<CorpusSample> FromJsonLines(std::string_view text);

// Loads `<name>.mini` + `<name>.json` pairs from a directory, sorted by name.
std::vector<SeedProgram> LoadSeedDirectory(const std::string& dir);

}  // namespace iterfix::perturb

#endif  // ITERFIX_PERTURB_CORPUS_H_

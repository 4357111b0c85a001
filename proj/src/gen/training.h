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

#ifndef ITERFIX_GEN_TRAINING_H_
#define ITERFIX_GEN_TRAINING_H_

#include <cstdint>
#include <vector>

#include "gen/model.h"
#include "perturb/corpus.h"

namespace iterfix::gen {

// weight(class, template) = smoothing + number of samples of that class for
// which some instantiation of the template at the sample's repair line
// reproduces the fixed program (token-normalized). Throws InputError on an
// empty corpus.
GeneratorModel TrainInitial(const std::vector<perturb::CorpusSample>& corpus);

struct TrainOptions {
  int k = 2;
  int max_iter = 3;
  uint64_t seed = 42;
  int64_t step_budget = exec::kDefaultStepBudget;
};

struct GrowthRow {
  int iteration = 0;
  size_t size = 0;   // |S| after the iteration
  size_t added = 0;  // pairs added during the iteration
};

struct TrainResult {
  GeneratorModel model;
  std::vector<perturb::CorpusSample> augmented;  // S, starting with I
  std::vector<GrowthRow> growth;                 // max_iter + 1 rows
};

// Self-augmenting training loop: each round generates k variants per pair in
// S, keeps (v, f) when v differs from both b and f and still fails to check
// or fails a test, then retrains on the grown S.
TrainResult IterativeTrain(const std::vector<perturb::CorpusSample>& initial,
                           const TrainOptions& options);

std::string GrowthTable(const std::vector<GrowthRow>& rows);

}  // namespace iterfix::gen

#endif  // ITERFIX_GEN_TRAINING_H_

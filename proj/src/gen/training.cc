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

#include "gen/training.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "common/errors.h"
#include "gen/templates.h"

namespace iterfix::gen {
namespace {

std::string PairKey(const perturb::CorpusSample& s) {
  return lang::TokenKey(s.buggy.text()) + '\x1f' + lang::TokenKey(s.fixed.text());
}

}  // namespace

GeneratorModel TrainInitial(const std::vector<perturb::CorpusSample>& corpus) {
  if (corpus.empty()) throw InputError("cannot train on an empty corpus");
  std::map<std::pair<std::string, std::string>, int> counts;
  for (const perturb::CorpusSample& sample : corpus) {
    std::string diag_class = DiagClass(sample.diagnostic);
    std::string target = lang::TokenKey(sample.fixed.text());
    RepairContext ctx =
        MakeContext(sample.buggy, perturb::RepairLine(sample), sample.diagnostic);
    std::set<std::string> credited;
    for (const CandidatePatch& patch : EnumerateCandidates(ctx)) {
      if (credited.count(patch.template_id) > 0) continue;
      std::string result = lang::JoinLines(ApplyToLines(sample.buggy.lines(), patch));
      if (lang::TokenKey(result) == target) credited.insert(patch.template_id);
    }
    for (const std::string& id : credited) ++counts[{diag_class, id}];
  }
  GeneratorModel model;
  for (const auto& [key, count] : counts) {
    model.Set(key.first, key.second, GeneratorModel::kSmoothing + count);
  }
  return model;
}

TrainResult IterativeTrain(const std::vector<perturb::CorpusSample>& initial,
                           const TrainOptions& options) {
  if (options.k < 1) throw InputError("k must be at least 1");
  if (options.max_iter < 0) throw InputError("max_iter must be nonnegative");
  TrainResult result;
  result.augmented = initial;
  std::set<std::string> keys;
  for (const perturb::CorpusSample& s : initial) keys.insert(PairKey(s));
  result.model = TrainInitial(result.augmented);
  result.growth.push_back(GrowthRow{0, result.augmented.size(), 0});

  for (int iteration = 1; iteration <= options.max_iter; ++iteration) {
    size_t snapshot = result.augmented.size();
    size_t added = 0;
    for (size_t i = 0; i < snapshot; ++i) {
      // Copy: push_back below may reallocate.
      perturb::CorpusSample base = result.augmented[i];
      std::string buggy_key = lang::TokenKey(base.buggy.text());
      std::string fixed_key = lang::TokenKey(base.fixed.text());
      RepairContext ctx =
          MakeContext(base.buggy, perturb::RepairLine(base), base.diagnostic);
      for (const CandidatePatch& patch : Generate(result.model, ctx, options.k)) {
        lang::SourceProgram variant = ApplyPatch(base.buggy, patch);
        std::string variant_key = lang::TokenKey(variant.text());
        if (variant_key == buggy_key || variant_key == fixed_key) continue;
        if (!keys.insert(variant_key + '\x1f' + fixed_key).second) continue;
        exec::Validation v = exec::Validate(variant, *base.suite, options.step_budget);
        if (v.kind == exec::StateKind::kPlausible) continue;
        perturb::CorpusSample sample;
        sample.id = base.id + "~" + std::to_string(iteration) + "." +
                    std::to_string(patch.beam_rank);
        sample.program = base.program;
        sample.buggy = std::move(variant);
        sample.fixed = base.fixed;
        sample.op = "gen:" + patch.template_id;
        sample.site_line = std::clamp(patch.start_line, 1, sample.buggy.line_count());
        sample.site_lines = {sample.site_line};
        sample.diag_kind = v.kind;
        sample.diagnostic = v.diagnostic;
        sample.suite = base.suite;
        result.augmented.push_back(std::move(sample));
        ++added;
      }
    }
    result.model = TrainInitial(result.augmented);
    result.growth.push_back(GrowthRow{iteration, result.augmented.size(), added});
  }
  return result;
}

std::string GrowthTable(const std::vector<GrowthRow>& rows) {
  std::ostringstream out;
  out << "iteration  size  added\n";
  for (const GrowthRow& row : rows) {
    out << row.iteration << "  " << row.size << "  " << row.added << "\n";
  }
  return out.str();
}

}  // namespace iterfix::gen

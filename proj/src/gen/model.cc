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

#include "gen/model.h"

#include <algorithm>
#include <set>

#include "common/errors.h"
#include "gen/templates.h"
#include "json.hpp"

namespace iterfix::gen {

std::string GeneratorModel::Key(std::string_view diag_class, std::string_view template_id) {
  std::string key(diag_class);
  key += '|';
  key += template_id;
  return key;
}

double GeneratorModel::Weight(std::string_view diag_class,
                              std::string_view template_id) const {
  auto it = weights_.find(Key(diag_class, template_id));
  return it == weights_.end() ? kSmoothing : it->second;
}

void GeneratorModel::Set(std::string_view diag_class, std::string_view template_id,
                         double weight) {
  if (weight < 0) throw ContractError("model weights must be nonnegative");
  weights_[Key(diag_class, template_id)] = weight;
}

std::string GeneratorModel::ToJson() const {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [key, weight] : weights_) doc[key] = weight;
  return doc.dump(2);
}

GeneratorModel GeneratorModel::FromJson(std::string_view json_text) {
  nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw InputError("model must be a JSON object of weights");
  }
  GeneratorModel model;
  for (const auto& [key, value] : doc.items()) {
    size_t bar = key.find('|');
    if (bar == std::string::npos || !value.is_number() || value.get<double>() < 0) {
      throw InputError("bad model entry '" + key + "'");
    }
    model.weights_[key] = value.get<double>();
  }
  return model;
}

std::vector<CandidatePatch> Generate(const GeneratorModel& model, const RepairContext& ctx,
                                     int k) {
  if (k < 1) throw ContractError("beam width must be at least 1");
  std::string diag_class = DiagClass(ctx.diagnostic);
  struct Ranked {
    CandidatePatch patch;
    std::string joined;
    std::string result;
  };
  std::vector<Ranked> ranked;
  for (CandidatePatch& patch : EnumerateCandidates(ctx)) {
    std::string result = lang::JoinLines(ApplyToLines(ctx.source.lines(), patch));
    if (result == ctx.source.text()) continue;
    patch.score = model.Weight(diag_class, patch.template_id);
    std::string joined = lang::JoinLines(patch.replacement);
    ranked.push_back(Ranked{std::move(patch), std::move(joined), std::move(result)});
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    if (a.patch.score != b.patch.score) return a.patch.score > b.patch.score;
    if (a.patch.template_id != b.patch.template_id) {
      return a.patch.template_id < b.patch.template_id;
    }
    if (a.patch.start_line != b.patch.start_line) {
      return a.patch.start_line < b.patch.start_line;
    }
    if (a.joined != b.joined) return a.joined < b.joined;
    return a.patch.end_line < b.patch.end_line;
  });
  std::vector<CandidatePatch> beam;
  std::set<std::string> produced;
  for (Ranked& r : ranked) {
    if (static_cast<int>(beam.size()) == k) break;
    if (!produced.insert(r.result).second) continue;
    r.patch.beam_rank = static_cast<int>(beam.size()) + 1;
    beam.push_back(std::move(r.patch));
  }
  return beam;
}

}  // namespace iterfix::gen

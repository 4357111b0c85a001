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

#ifndef ITERFIX_GEN_MODEL_H_
#define ITERFIX_GEN_MODEL_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gen/context.h"
#include "gen/patch.h"

namespace iterfix::gen {

// Count-based template ranking keyed by (diagnostic class, template id).
class GeneratorModel {
 public:
  static constexpr double kSmoothing = 0.1;

  // Absent keys weigh kSmoothing.
  double Weight(std::string_view diag_class, std::string_view template_id) const;
  void Set(std::string_view diag_class, std::string_view template_id, double weight);

  const std::map<std::string, double>& weights() const { return weights_; }

  // {"<diag-class>|<template_id>": weight, ...}; keys sorted.
  std::string ToJson() const;
  static GeneratorModel FromJson(std::string_view json_text);  // throws InputError

  bool operator==(const GeneratorModel& other) const = default;

 private:
  static std::string Key(std::string_view diag_class, std::string_view template_id);

  std::map<std::string, double> weights_;
};

// Top-k candidates ranked by model weight, then template id, start line and
// replacement text. Candidates that leave the source unchanged are dropped,
// as are later candidates producing the same text as an earlier one.
std::vector<CandidatePatch> Generate(const GeneratorModel& model, const RepairContext& ctx,
                                     int k);

}  // namespace iterfix::gen

#endif  // ITERFIX_GEN_MODEL_H_

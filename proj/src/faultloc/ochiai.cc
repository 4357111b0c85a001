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

#include "faultloc/ochiai.h"

#include <algorithm>
#include <cmath>

#include "common/errors.h"

namespace iterfix::faultloc {

Spectrum BuildSpectrum(const exec::TestReport& report, const std::set<int>& executable) {
  Spectrum spectrum;
  for (int line : executable) spectrum.lines[line];
  for (const exec::TestResult& r : report.results) {
    bool failed = r.outcome.status != exec::TestStatus::kPass;
    (failed ? spectrum.total_failing : spectrum.total_passing)++;
    for (int line : r.coverage) {
      auto it = spectrum.lines.find(line);
      if (it == spectrum.lines.end()) continue;
      (failed ? it->second.failed_covered : it->second.passed_covered)++;
    }
  }
  for (auto& [line, counts] : spectrum.lines) {
    counts.failed_missed = spectrum.total_failing - counts.failed_covered;
    counts.passed_missed = spectrum.total_passing - counts.passed_covered;
  }
  return spectrum;
}

double Ochiai(int failed_covered, int passed_covered, int total_failing) {
  if (failed_covered > total_failing) {
    throw ContractError("Ochiai: e_f exceeds the number of failing tests");
  }
  if (failed_covered == 0) return 0.0;
  double denominator = std::sqrt(static_cast<double>(total_failing) *
                                 static_cast<double>(failed_covered + passed_covered));
  if (denominator == 0.0) return 0.0;
  return static_cast<double>(failed_covered) / denominator;
}

std::vector<SuspiciousLocation> Rank(const exec::TestReport& report,
                                     const std::set<int>& executable, int top_n) {
  if (report.failing == 0) throw ContractError("Rank: no failing tests");
  if (top_n < 1) throw ContractError("Rank: top_n must be positive");
  Spectrum spectrum = BuildSpectrum(report, executable);
  std::vector<SuspiciousLocation> ranked;
  for (const auto& [line, counts] : spectrum.lines) {
    double score = Ochiai(counts.failed_covered, counts.passed_covered,
                          spectrum.total_failing);
    if (score > 0.0) ranked.push_back(SuspiciousLocation{line, score, 0});
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const SuspiciousLocation& a, const SuspiciousLocation& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return a.line < b.line;
                   });
  if (ranked.size() > static_cast<size_t>(top_n)) ranked.resize(static_cast<size_t>(top_n));
  for (size_t i = 0; i < ranked.size(); ++i) ranked[i].rank = static_cast<int>(i) + 1;
  return ranked;
}

}  // namespace iterfix::faultloc

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

#ifndef ITERFIX_FAULTLOC_OCHIAI_H_
#define ITERFIX_FAULTLOC_OCHIAI_H_

#include <map>
#include <set>
#include <vector>

#include "exec/runner.h"

namespace iterfix::faultloc {

inline constexpr int kDefaultTopN = 50;

struct LineCounts {
  int failed_covered = 0;   // e_f
  int passed_covered = 0;   // e_p
  int failed_missed = 0;    // n_f
  int passed_missed = 0;    // n_p
};

struct Spectrum {
  std::map<int, LineCounts> lines;
  int total_failing = 0;
  int total_passing = 0;
};

struct SuspiciousLocation {
  int line = 0;
  double score = 0.0;
  int rank = 0;
};

Spectrum BuildSpectrum(const exec::TestReport& report, const std::set<int>& executable);

// e_f / sqrt(total_failing * (e_f + e_p)); zero when e_f or the denominator is 0.
double Ochiai(int failed_covered, int passed_covered, int total_failing);

// Lines with positive score, best first, ties by ascending line, at most
// top_n entries. Requires at least one failing test.
std::vector<SuspiciousLocation> Rank(const exec::TestReport& report,
                                     const std::set<int>& executable,
                                     int top_n = kDefaultTopN);

}  // namespace iterfix::faultloc

#endif  // ITERFIX_FAULTLOC_OCHIAI_H_

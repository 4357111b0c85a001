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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include "json.hpp"
#include <random>
#include <sstream>

#include "common/errors.h"
#include "faultloc/ochiai.h"
#include "gen/patch.h"
#include "test_util.h"

namespace iterfix::faultloc {
namespace {

using exec::TestReport;
using exec::TestResult;
using exec::TestStatus;
using testing::Fixture;

TestResult Result(std::string name, bool passed, std::set<int> coverage) {
  TestResult r;
  r.name = std::move(name);
  r.outcome.status = passed ? TestStatus::kPass : TestStatus::kFail;
  r.coverage = std::move(coverage);
  return r;
}

TestReport MakeReport(std::vector<TestResult> results) {
  TestReport report;
  for (const TestResult& r : results) {
    if (r.outcome.status != TestStatus::kPass) ++report.failing;
  }
  report.results = std::move(results);
  return report;
}

TEST(Ochiai, Examples) {
  EXPECT_DOUBLE_EQ(Ochiai(1, 0, 1), 1.0);
  EXPECT_DOUBLE_EQ(Ochiai(0, 5, 3), 0.0);
  EXPECT_DOUBLE_EQ(Ochiai(0, 0, 0), 0.0);
  EXPECT_NEAR(Ochiai(2, 2, 2), 0.707107, 1e-6);
  EXPECT_NEAR(Ochiai(2, 2, 2), 2.0 / std::sqrt(8.0), 1e-12);
}

TEST(Spectrum, SingleFailingTest) {
  Spectrum s = BuildSpectrum(MakeReport({Result("t", false, {4})}), {4, 5});
  EXPECT_EQ(s.lines.at(4).failed_covered, 1);
  EXPECT_EQ(s.lines.at(4).passed_covered, 0);
  EXPECT_EQ(s.lines.at(4).failed_missed, 0);
  EXPECT_EQ(s.lines.at(4).passed_missed, 0);
  EXPECT_EQ(s.lines.at(5).failed_covered, 0);
  EXPECT_EQ(s.lines.at(5).passed_covered, 0);
}

struct SpectrumFixture {
  TestReport report;
  std::set<int> executable;
};

SpectrumFixture LoadSpectrumFixture() {
  auto j = nlohmann::json::parse(ReadFile(Fixture("spectrum/report.json")));
  SpectrumFixture f;
  for (int line : j["executable"]) f.executable.insert(line);
  std::vector<TestResult> results;
  for (const auto& t : j["tests"]) {
    results.push_back(Result(t["name"], t["passed"], t["coverage"].get<std::set<int>>()));
  }
  f.report = MakeReport(std::move(results));
  return f;
}

TEST(Spectrum, ShippedFixtureGolden) {
  SpectrumFixture f = LoadSpectrumFixture();
  Spectrum s = BuildSpectrum(f.report, f.executable);
  std::istringstream golden(ReadFile(Fixture("golden/spectrum_counts.txt")));
  std::string header;
  std::getline(golden, header);
  int rows = 0;
  for (int line, ef, ep, nf, np; golden >> line >> ef >> ep >> nf >> np; ++rows) {
    const LineCounts& c = s.lines.at(line);
    EXPECT_EQ(c.failed_covered, ef) << line;
    EXPECT_EQ(c.passed_covered, ep) << line;
    EXPECT_EQ(c.failed_missed, nf) << line;
    EXPECT_EQ(c.passed_missed, np) << line;
  }
  EXPECT_EQ(rows, 5);
  EXPECT_EQ(s.lines.size(), 5u);
}

TEST(Rank, ShippedFixture) {
  SpectrumFixture f = LoadSpectrumFixture();
  auto ranked = Rank(f.report, f.executable);
  ASSERT_EQ(ranked.size(), 3u);
  EXPECT_EQ(ranked[0].line, 4);
  EXPECT_DOUBLE_EQ(ranked[0].score, 1.0);
  EXPECT_EQ(ranked[1].line, 2);
  EXPECT_NEAR(ranked[1].score, 1 / std::sqrt(2.0), 1e-12);
  EXPECT_EQ(ranked[2].line, 1);
  EXPECT_NEAR(ranked[2].score, 1 / std::sqrt(3.0), 1e-12);
}

TEST(Rank, SoleCoveredLineIsFirst) {
  auto ranked = Rank(MakeReport({Result("a", false, {3}), Result("b", false, {3}),
                                 Result("c", true, {1, 2})}),
                     {1, 2, 3});
  ASSERT_EQ(ranked.size(), 1u);
  EXPECT_EQ(ranked[0].line, 3);
  EXPECT_EQ(ranked[0].rank, 1);
  EXPECT_DOUBLE_EQ(ranked[0].score, 1.0);
}

TEST(Rank, TiesBreakByAscendingLine) {
  auto ranked = Rank(MakeReport({Result("a", false, {7, 2, 5})}), {2, 5, 7});
  ASSERT_EQ(ranked.size(), 3u);
  EXPECT_EQ(ranked[0].line, 2);
  EXPECT_EQ(ranked[1].line, 5);
  EXPECT_EQ(ranked[2].line, 7);
}

TEST(Rank, TopNTruncates) {
  auto ranked = Rank(MakeReport({Result("a", false, {1, 2, 3, 4})}), {1, 2, 3, 4}, 2);
  EXPECT_EQ(ranked.size(), 2u);
  EXPECT_EQ(kDefaultTopN, 50);
}

TEST(Rank, NoFailingTestsIsAContractViolation) {
  EXPECT_THROW(Rank(MakeReport({Result("a", true, {1})}), {1}), ContractError);
}

// Reference scorer: counts recomputed from raw set membership.
std::vector<SuspiciousLocation> Reference(const TestReport& report,
                                          const std::set<int>& executable, int top_n) {
  int failing = 0;
  for (const auto& r : report.results) failing += r.outcome.status != TestStatus::kPass;
  std::vector<SuspiciousLocation> out;
  for (int line : executable) {
    int ef = 0, ep = 0;
    for (const auto& r : report.results) {
      if (std::find(r.coverage.begin(), r.coverage.end(), line) == r.coverage.end()) continue;
      (r.outcome.status == TestStatus::kPass ? ep : ef)++;
    }
    if (ef == 0) continue;
    out.push_back({line, ef / std::sqrt(double(failing) * (ef + ep)), 0});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (std::abs(a.score - b.score) > 1e-12) return a.score > b.score;
    return a.line < b.line;
  });
  if (static_cast<int>(out.size()) > top_n) out.resize(top_n);
  for (size_t i = 0; i < out.size(); ++i) out[i].rank = static_cast<int>(i) + 1;
  return out;
}

TestReport RandomReport(std::mt19937_64& rng, std::set<int>* executable) {
  int lines = 1 + rng() % 30;
  int tests = 1 + rng() % 10;
  executable->clear();
  for (int l = 1; l <= lines; ++l) executable->insert(l);
  std::vector<TestResult> results;
  for (int t = 0; t < tests; ++t) {
    std::set<int> cov;
    for (int l = 1; l <= lines; ++l) {
      if (rng() % 3 == 0) cov.insert(l);
    }
    results.push_back(Result("t" + std::to_string(t), t != 0 && rng() % 2, cov));
  }
  return MakeReport(std::move(results));
}

TEST(Rank, MatchesReferenceOnRandomReports) {
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 1000; ++i) {
    std::set<int> executable;
    TestReport report = RandomReport(rng, &executable);
    int top_n = 1 + rng() % 40;
    auto got = Rank(report, executable, top_n);
    auto want = Reference(report, executable, top_n);
    ASSERT_EQ(got.size(), want.size()) << "sample " << i;
    for (size_t j = 0; j < got.size(); ++j) {
      EXPECT_EQ(got[j].line, want[j].line) << "sample " << i;
      EXPECT_EQ(got[j].rank, want[j].rank);
      EXPECT_NEAR(got[j].score, want[j].score, 1e-9);
      EXPECT_GE(got[j].score, 0.0);
      EXPECT_LE(got[j].score, 1.0);
      if (j > 0) EXPECT_GE(got[j - 1].score, got[j].score);
    }
  }
}

TEST(Spectrum, CountsSumToTotals) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    std::set<int> executable;
    TestReport report = RandomReport(rng, &executable);
    Spectrum s = BuildSpectrum(report, executable);
    for (const auto& [line, c] : s.lines) {
      EXPECT_EQ(c.failed_covered + c.failed_missed, s.total_failing);
      EXPECT_EQ(c.passed_covered + c.passed_missed, s.total_passing);
    }
  }
}

TEST(Rank, InvariantUnderTestOrder) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    std::set<int> executable;
    TestReport report = RandomReport(rng, &executable);
    TestReport shuffled = report;
    std::shuffle(shuffled.results.begin(), shuffled.results.end(), rng);
    auto a = Rank(report, executable);
    auto b = Rank(shuffled, executable);
    ASSERT_EQ(a.size(), b.size());
    for (size_t j = 0; j < a.size(); ++j) {
      EXPECT_EQ(a[j].line, b[j].line);
      EXPECT_EQ(a[j].score, b[j].score);
    }
  }
}

int RankOf(const std::vector<SuspiciousLocation>& ranked, int line) {
  for (const auto& s : ranked) {
    if (s.line == line) return s.rank;
  }
  return std::numeric_limits<int>::max();
}

TEST(Rank, SecondBuggyLineClimbsAfterThePartialFix) {
  lang::SourceProgram p = testing::LoadProgram("bugs/ml_norm.mini");
  exec::TestSuite suite = testing::LoadSuite("bugs/ml_norm.json");
  auto before = Rank(exec::RunSuite(p, suite), lang::ExecutableLines(p.ast()));
  lang::SourceProgram fixed = gen::ApplyPatch(p, {4, 4, {"    u = 0 - p;"}, "", 0, 0});
  auto after = Rank(exec::RunSuite(fixed, suite), lang::ExecutableLines(fixed.ast()));
  EXPECT_LT(RankOf(after, 8), RankOf(before, 8));
  EXPECT_EQ(RankOf(after, 8), 1);
}

}  // namespace
}  // namespace iterfix::faultloc

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

#include "check/checker.h"
#include "common/errors.h"
#include "exec/validate.h"
#include "perturb/corpus.h"
#include "perturb/perturb.h"
#include "test_util.h"

namespace iterfix::perturb {
namespace {

using lang::SourceProgram;
using testing::Fixture;

// Lines that differ between two texts, assuming equal line counts.
std::vector<int> ChangedLines(const SourceProgram& a, const SourceProgram& b) {
  std::vector<int> out;
  for (int i = 0; i < std::min(a.line_count(), b.line_count()); ++i) {
    if (a.lines()[i] != b.lines()[i]) out.push_back(i + 1);
  }
  return out;
}

TEST(PerturbSites, ReplaceBinopOnAddition) {
  SourceProgram p("fn f(a: int, b: int) -> int {\n  return a + b;\n}");
  std::vector<std::string> got;
  for (const Mutant& m : PerturbSites(p, PerturbOp::kReplaceBinop)) {
    EXPECT_EQ(m.site_line, 2);
    got.push_back(SourceProgram(m.text).lines()[1]);
  }
  EXPECT_EQ(got, (std::vector<std::string>{"  return a - b;", "  return a * b;",
                                           "  return a / b;", "  return a % b;"}));
}

TEST(PerturbSites, RemoveDelimiterCanDropTheFinalBrace) {
  SourceProgram p("fn f() -> int {\n  return 1;\n}");
  bool found = false;
  for (const Mutant& m : PerturbSites(p, PerturbOp::kRemoveDelimiter)) {
    SourceProgram q(m.text);
    if (q.lines().back().empty() || q.text().find('}') == std::string::npos) {
      found = true;
      EXPECT_FALSE(q.parsed());
    }
  }
  EXPECT_TRUE(found);
}

TEST(PerturbSites, DeleteStatementOnThreeStatements) {
  SourceProgram p("fn f() -> int {\n  let a = 1;\n  let b = 2;\n  return a + b;\n}");
  EXPECT_EQ(PerturbSites(p, PerturbOp::kDeleteStatement).size(), 3u);
}

TEST(PerturbSites, InapplicableOpGivesNothing) {
  SourceProgram p("fn f() -> int {\n  return 1;\n}");
  EXPECT_TRUE(PerturbSites(p, PerturbOp::kSwapCallArgs).empty());
  EXPECT_TRUE(PerturbSites(p, PerturbOp::kDropElse).empty());
}

TEST(PerturbSites, OrderedByLineAndChangeOneRange) {
  SourceProgram p = testing::LoadProgram("programs/triangle.mini");
  for (PerturbOp op : AllOps()) {
    std::vector<Mutant> mutants = PerturbSites(p, op);
    for (size_t i = 1; i < mutants.size(); ++i) {
      EXPECT_LE(mutants[i - 1].site_line, mutants[i].site_line) << OpName(op);
    }
    for (const Mutant& m : mutants) {
      EXPECT_NE(m.text, p.text());
      if (!IsLinePreserving(op)) continue;
      std::vector<int> changed = ChangedLines(p, SourceProgram(m.text));
      ASSERT_EQ(changed.size(), 1u) << OpName(op);
      EXPECT_EQ(changed[0], m.site_line);
    }
    EXPECT_EQ(PerturbSites(p, op).size(), mutants.size());
  }
}

TEST(Ops, NamesRoundTrip) {
  for (PerturbOp op : AllOps()) EXPECT_EQ(OpFromName(OpName(op)), op);
  EXPECT_FALSE(OpFromName("no-such-op").has_value());
}

class CorpusTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    seeds_ = new std::vector<SeedProgram>(LoadSeedDirectory(Fixture("programs")));
  }
  static void TearDownTestSuite() { delete seeds_; }
  static std::vector<SeedProgram>* seeds_;
};
std::vector<SeedProgram>* CorpusTest::seeds_ = nullptr;

TEST_F(CorpusTest, SamplesReexecuteToTheirRecordedKind) {
  CorpusOptions options;
  options.per_program = 6;
  std::vector<CorpusSample> corpus = BuildCorpus(*seeds_, options);
  ASSERT_FALSE(corpus.empty());
  for (const CorpusSample& s : corpus) {
    exec::Validation v = exec::Validate(s.buggy, *s.suite);
    EXPECT_EQ(v.kind, s.diag_kind) << s.id;
    EXPECT_EQ(v.diagnostic, s.diagnostic) << s.id;
    EXPECT_EQ(exec::Validate(s.fixed, *s.suite).kind, exec::StateKind::kPlausible);
    if (s.op == "remove-delimiter") EXPECT_EQ(s.diag_kind, exec::StateKind::kCompileError);
  }
}

TEST_F(CorpusTest, SameSeedSameBytes) {
  CorpusOptions options;
  options.per_program = 5;
  std::string a = ToJsonLines(BuildCorpus(*seeds_, options));
  std::string b = ToJsonLines(BuildCorpus(*seeds_, options));
  EXPECT_EQ(a, b);
  options.seed = 43;
  EXPECT_NE(ToJsonLines(BuildCorpus(*seeds_, options)), a);
}

TEST_F(CorpusTest, MostMutantsAreKept) {
  CorpusOptions options;
  options.per_program = 20;
  CorpusStats stats;
  BuildCorpus(*seeds_, options, &stats);
  ASSERT_GT(stats.generated, 0);
  EXPECT_GE(2 * stats.kept, stats.generated)
      << stats.kept << " of " << stats.generated << " kept";
}

TEST_F(CorpusTest, NegatedCoveredConditionIsAFunctionalError) {
  CorpusOptions options;
  options.per_program = 200;
  int negations = 0;
  for (const CorpusSample& s : BuildCorpus(*seeds_, options)) {
    if (s.op != "negate-condition") continue;
    ++negations;
    EXPECT_EQ(s.diag_kind, exec::StateKind::kFunctionalError) << s.id;
  }
  EXPECT_GT(negations, 0);
}

TEST_F(CorpusTest, TwoLocationSamplesTouchTwoLines) {
  CorpusOptions options;
  options.per_program = 3;
  options.locations = 2;
  std::vector<CorpusSample> corpus = BuildCorpus(*seeds_, options);
  ASSERT_FALSE(corpus.empty());
  for (const CorpusSample& s : corpus) {
    ASSERT_EQ(s.site_lines.size(), 2u) << s.id;
    EXPECT_LT(s.site_lines[0], s.site_lines[1]);
    EXPECT_EQ(ChangedLines(s.buggy, s.fixed), s.site_lines) << s.id;
  }
}

TEST_F(CorpusTest, SeedFailingItsSuiteIsRejected) {
  std::vector<SeedProgram> seeds = {(*seeds_)[0]};
  seeds[0].program = SourceProgram("fn nope() -> int {\n  return 0;\n}");
  EXPECT_THROW(BuildCorpus(seeds, CorpusOptions{}), InputError);
}

TEST(Corpus, JsonLinesRoundTrip) {
  std::string text = ReadFile(Fixture("corpus/corpus.jsonl"));
  std::vector<CorpusSample> corpus = FromJsonLines(text);
  EXPECT_EQ(corpus.size(), 220u);
  EXPECT_EQ(ToJsonLines(corpus), text);
  EXPECT_THROW(FromJsonLine("{\"id\": 1}"), InputError);
  EXPECT_THROW(FromJsonLine("not json"), InputError);
}

TEST(Corpus, ShippedCorpusMatchesRegeneration) {
  CorpusOptions options;
  std::string regenerated =
      ToJsonLines(BuildCorpus(LoadSeedDirectory(Fixture("programs")), options));
  EXPECT_EQ(regenerated, ReadFile(Fixture("corpus/corpus.jsonl")));
}

}  // namespace
}  // namespace iterfix::perturb

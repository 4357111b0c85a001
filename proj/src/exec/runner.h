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

#ifndef ITERFIX_EXEC_RUNNER_H_
#define ITERFIX_EXEC_RUNNER_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lang/source.h"

namespace iterfix::exec {

// 64-bit wrapping int or bool.
using Value = std::variant<int64_t, bool>;

std::string ToString(const Value& value);

inline constexpr int64_t kDefaultStepBudget = 100'000;

struct TestCase {
  std::string name;
  std::string entry;
  std::vector<Value> args;
  // nullopt means the test expects a runtime error.
  std::optional<Value> expect;
};

struct TestSuite {
  std::vector<TestCase> tests;
};

enum class TestStatus { kPass, kFail, kRuntimeError, kTimeout };

std::string_view StatusName(TestStatus status);

struct TestOutcome {
  TestStatus status = TestStatus::kPass;
  std::string detail;
};

struct TestResult {
  std::string name;
  TestOutcome outcome;
  std::set<int> coverage;
};

struct TestReport {
  std::vector<TestResult> results;  // declared suite order
  int failing = 0;

  int total() const { return static_cast<int>(results.size()); }
  int passing() const { return total() - failing; }
};

// Runs one test. The program must parse and should pass the static checker;
// runtime errors and budget exhaustion are outcomes, never exceptions.
TestResult RunTest(const lang::SourceProgram& program, const TestCase& test,
                   int64_t step_budget = kDefaultStepBudget);

// Runs the whole suite; with threads > 1 tests execute concurrently but the
// report is assembled in declared order.
TestReport RunSuite(const lang::SourceProgram& program, const TestSuite& suite,
                    int64_t step_budget = kDefaultStepBudget, int threads = 0);

// JSON suite format:
// {"tests":[{"name":"t1","entry":"main","args":[2,3],"expect":5},
//           {"name":"t2","entry":"main","args":[0],"expect":{"runtime_error":true}}]}
// Throws InputError on malformed input or duplicate names.
TestSuite ParseSuite(std::string_view json_text);
std::string SuiteToJson(const TestSuite& suite);

}  // namespace iterfix::exec

#endif  // ITERFIX_EXEC_RUNNER_H_

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

#ifndef ITERFIX_TESTS_TEST_UTIL_H_
#define ITERFIX_TESTS_TEST_UTIL_H_

#include <string>

#include "common/io.h"
#include "exec/runner.h"
#include "lang/source.h"

namespace iterfix::testing {

inline std::string Fixture(const std::string& relative) {
  return std::string(ITERFIX_FIXTURES) + "/" + relative;
}

inline lang::SourceProgram LoadProgram(const std::string& relative) {
  return lang::SourceProgram(ReadSourceFile(Fixture(relative)));
}

inline exec::TestSuite LoadSuite(const std::string& relative) {
  return exec::ParseSuite(ReadFile(Fixture(relative)));
}

}  // namespace iterfix::testing

#endif  // ITERFIX_TESTS_TEST_UTIL_H_

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

#ifndef ITERFIX_COMMON_ERRORS_H_
#define ITERFIX_COMMON_ERRORS_H_

#include <stdexcept>
#include <string>

namespace iterfix {

// A caller broke a documented precondition. Never produced by bad input data.
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// User-supplied input (files, suites, corpora) was rejected.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace iterfix

#endif  // ITERFIX_COMMON_ERRORS_H_

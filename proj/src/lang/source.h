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

#ifndef ITERFIX_LANG_SOURCE_H_
#define ITERFIX_LANG_SOURCE_H_

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lang/ast.h"
#include "lang/parser.h"

namespace iterfix::lang {

// Immutable MiniLang source plus its parse. Copies share the parse result.
class SourceProgram {
 public:
  SourceProgram() : SourceProgram(std::string()) {}
  explicit SourceProgram(std::string text);

  static SourceProgram FromLines(const std::vector<std::string>& lines);

  const std::string& text() const { return text_; }
  // Joining these with '\n' reproduces text() exactly.
  const std::vector<std::string>& lines() const { return lines_; }
  int line_count() const { return static_cast<int>(lines_.size()); }

  bool parsed() const { return std::holds_alternative<Ast>(*parse_); }
  const Ast& ast() const;  // requires parsed()
  const ParseFailure& failure() const;  // requires !parsed()
  const ParseResult& parse() const { return *parse_; }

 private:
  std::string text_;
  std::vector<std::string> lines_;
  std::shared_ptr<const ParseResult> parse_;
};

std::vector<std::string> SplitLines(std::string_view text);
std::string JoinLines(const std::vector<std::string>& lines);

// Lines holding a simple statement or an if/while condition.
std::set<int> ExecutableLines(const Ast& ast);

}  // namespace iterfix::lang

#endif  // ITERFIX_LANG_SOURCE_H_

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

#include "lang/source.h"

#include <utility>

#include "common/errors.h"

namespace iterfix::lang {

std::vector<std::string> SplitLines(std::string_view text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (true) {
    size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::string JoinLines(const std::vector<std::string>& lines) {
  std::string text;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) text += '\n';
    text += lines[i];
  }
  return text;
}

SourceProgram::SourceProgram(std::string text)
    : text_(std::move(text)),
      lines_(SplitLines(text_)),
      parse_(std::make_shared<const ParseResult>(Parse(text_))) {}

SourceProgram SourceProgram::FromLines(const std::vector<std::string>& lines) {
  return SourceProgram(JoinLines(lines));
}

const Ast& SourceProgram::ast() const {
  if (!parsed()) throw ContractError("program does not parse");
  return std::get<Ast>(*parse_);
}

const ParseFailure& SourceProgram::failure() const {
  if (parsed()) throw ContractError("program parses; no failure");
  return std::get<ParseFailure>(*parse_);
}

namespace {

void CollectLines(const std::vector<Stmt>& body, std::set<int>& out) {
  for (const Stmt& s : body) {
    switch (s.kind) {
      case Stmt::Kind::kIf:
      case Stmt::Kind::kWhile:
        out.insert(s.value.span.start_line);
        CollectLines(s.body, out);
        CollectLines(s.else_body, out);
        break;
      default:
        out.insert(s.span.start_line);
        break;
    }
  }
}

}  // namespace

std::set<int> ExecutableLines(const Ast& ast) {
  std::set<int> lines;
  for (const FuncDecl& fn : ast.functions) CollectLines(fn.body, lines);
  return lines;
}

}  // namespace iterfix::lang

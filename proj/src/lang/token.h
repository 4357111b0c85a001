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

#ifndef ITERFIX_LANG_TOKEN_H_
#define ITERFIX_LANG_TOKEN_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace iterfix::lang {

// 1-based, inclusive on both ends.
struct SourceSpan {
  int start_line = 1;
  int start_col = 1;
  int end_line = 1;
  int end_col = 1;
};

enum class TokenKind {
  kFn,
  kLet,
  kIf,
  kElse,
  kWhile,
  kReturn,
  kTrue,
  kFalse,
  kIntType,
  kBoolType,
  kIdent,
  kIntLit,
  kLParen,
  kRParen,
  kLBrace,
  kRBrace,
  kComma,
  kSemi,
  kColon,
  kArrow,
  kAssign,
  kPlus,
  kMinus,
  kStar,
  kSlash,
  kPercent,
  kLt,
  kLe,
  kGt,
  kGe,
  kEq,
  kNe,
  kAndAnd,
  kOrOr,
  kBang,
  kEof,
};

struct Token {
  TokenKind kind = TokenKind::kEof;
  std::string lexeme;
  SourceSpan span;
  size_t offset = 0;  // byte offset of the first character in the source
};

struct LexFailure {
  int line = 1;
  int col = 1;
  std::string message;
};

using LexResult = std::variant<std::vector<Token>, LexFailure>;

// Splits MiniLang source into tokens. Whitespace is dropped; the EOF marker is
// not part of the result.
LexResult Tokenize(std::string_view text);

// Human-readable description of a token kind, e.g. "'}'" or "identifier".
std::string Describe(TokenKind kind);

bool IsKeyword(TokenKind kind);

// Keywords in declaration order, spelled as in source.
const std::vector<std::string>& KeywordSpellings();

// Whitespace-insensitive identity of a source: lexemes joined by single
// spaces, or collapsed whitespace when the text does not lex.
std::string TokenKey(std::string_view text);

}  // namespace iterfix::lang

#endif  // ITERFIX_LANG_TOKEN_H_

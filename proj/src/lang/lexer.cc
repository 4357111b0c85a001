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

#include <array>
#include <cctype>
#include <string>
#include <utility>

#include "lang/token.h"

namespace iterfix::lang {
namespace {

struct Keyword {
  std::string_view spelling;
  TokenKind kind;
};

constexpr std::array<Keyword, 10> kKeywords = {{
    {"fn", TokenKind::kFn},
    {"let", TokenKind::kLet},
    {"if", TokenKind::kIf},
    {"else", TokenKind::kElse},
    {"while", TokenKind::kWhile},
    {"return", TokenKind::kReturn},
    {"true", TokenKind::kTrue},
    {"false", TokenKind::kFalse},
    {"int", TokenKind::kIntType},
    {"bool", TokenKind::kBoolType},
}};

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool IsIdentChar(char c) {
  return IsIdentStart(c) || std::isdigit(static_cast<unsigned char>(c)) != 0;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  LexResult Run() {
    std::vector<Token> tokens;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        Advance(1);
        continue;
      }
      size_t start = pos_;
      int line = line_;
      int col = col_;
      TokenKind kind;
      size_t length = 1;
      if (IsIdentStart(c)) {
        while (start + length < text_.size() &&
               IsIdentChar(text_[start + length])) {
          ++length;
        }
        kind = TokenKind::kIdent;
        std::string_view word = text_.substr(start, length);
        for (const Keyword& kw : kKeywords) {
          if (kw.spelling == word) kind = kw.kind;
        }
      } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
        while (start + length < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[start + length])) != 0) {
          ++length;
        }
        kind = TokenKind::kIntLit;
      } else {
        char next = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
        auto two = [&](TokenKind k) {
          length = 2;
          return k;
        };
        switch (c) {
          case '(': kind = TokenKind::kLParen; break;
          case ')': kind = TokenKind::kRParen; break;
          case '{': kind = TokenKind::kLBrace; break;
          case '}': kind = TokenKind::kRBrace; break;
          case ',': kind = TokenKind::kComma; break;
          case ';': kind = TokenKind::kSemi; break;
          case ':': kind = TokenKind::kColon; break;
          case '+': kind = TokenKind::kPlus; break;
          case '*': kind = TokenKind::kStar; break;
          case '/': kind = TokenKind::kSlash; break;
          case '%': kind = TokenKind::kPercent; break;
          case '-':
            kind = next == '>' ? two(TokenKind::kArrow) : TokenKind::kMinus;
            break;
          case '=':
            kind = next == '=' ? two(TokenKind::kEq) : TokenKind::kAssign;
            break;
          case '!':
            kind = next == '=' ? two(TokenKind::kNe) : TokenKind::kBang;
            break;
          case '<':
            kind = next == '=' ? two(TokenKind::kLe) : TokenKind::kLt;
            break;
          case '>':
            kind = next == '=' ? two(TokenKind::kGe) : TokenKind::kGt;
            break;
          case '&':
            if (next != '&') return Fail(line, col, "stray '&' (did you mean '&&'?)");
            kind = two(TokenKind::kAndAnd);
            break;
          case '|':
            if (next != '|') return Fail(line, col, "stray '|' (did you mean '||'?)");
            kind = two(TokenKind::kOrOr);
            break;
          default:
            return Fail(line, col, CharMessage(c));
        }
      }
      Token token;
      token.kind = kind;
      token.lexeme = std::string(text_.substr(start, length));
      token.offset = start;
      token.span = SourceSpan{line, col, line, col + static_cast<int>(length) - 1};
      tokens.push_back(std::move(token));
      Advance(length);
    }
    return tokens;
  }

 private:
  static LexFailure Fail(int line, int col, std::string message) {
    return LexFailure{line, col, std::move(message)};
  }

  static std::string CharMessage(char c) {
    auto byte = static_cast<unsigned char>(c);
    if (byte >= 0x20 && byte < 0x7f) {
      return std::string("invalid character '") + c + "'";
    }
    static const char* kHex = "0123456789abcdef";
    return std::string("invalid byte 0x") + kHex[byte >> 4] + kHex[byte & 0xf];
  }

  void Advance(size_t n) {
    for (size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

LexResult Tokenize(std::string_view text) { return Lexer(text).Run(); }

bool IsKeyword(TokenKind kind) {
  for (const Keyword& kw : kKeywords) {
    if (kw.kind == kind) return true;
  }
  return false;
}

const std::vector<std::string>& KeywordSpellings() {
  static const std::vector<std::string> spellings = [] {
    std::vector<std::string> out;
    for (const Keyword& kw : kKeywords) out.emplace_back(kw.spelling);
    return out;
  }();
  return spellings;
}

std::string Describe(TokenKind kind) {
  for (const Keyword& kw : kKeywords) {
    if (kw.kind == kind) return "'" + std::string(kw.spelling) + "'";
  }
  switch (kind) {
    case TokenKind::kIdent: return "identifier";
    case TokenKind::kIntLit: return "integer literal";
    case TokenKind::kLParen: return "'('";
    case TokenKind::kRParen: return "')'";
    case TokenKind::kLBrace: return "'{'";
    case TokenKind::kRBrace: return "'}'";
    case TokenKind::kComma: return "','";
    case TokenKind::kSemi: return "';'";
    case TokenKind::kColon: return "':'";
    case TokenKind::kArrow: return "'->'";
    case TokenKind::kAssign: return "'='";
    case TokenKind::kPlus: return "'+'";
    case TokenKind::kMinus: return "'-'";
    case TokenKind::kStar: return "'*'";
    case TokenKind::kSlash: return "'/'";
    case TokenKind::kPercent: return "'%'";
    case TokenKind::kLt: return "'<'";
    case TokenKind::kLe: return "'<='";
    case TokenKind::kGt: return "'>'";
    case TokenKind::kGe: return "'>='";
    case TokenKind::kEq: return "'=='";
    case TokenKind::kNe: return "'!='";
    case TokenKind::kAndAnd: return "'&&'";
    case TokenKind::kOrOr: return "'||'";
    case TokenKind::kBang: return "'!'";
    case TokenKind::kEof: return "end of input";
    default: return "token";
  }
}

std::string TokenKey(std::string_view text) {
  std::string key;
  LexResult lexed = Tokenize(text);
  if (const auto* tokens = std::get_if<std::vector<Token>>(&lexed)) {
    for (const Token& token : *tokens) {
      if (!key.empty()) key += ' ';
      key += token.lexeme;
    }
    return key;
  }
  bool pending_space = false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      pending_space = !key.empty();
      continue;
    }
    if (pending_space) key += ' ';
    pending_space = false;
    key += c;
  }
  return key;
}

}  // namespace iterfix::lang

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

#include "lang/parser.h"

#include <charconv>
#include <string>
#include <utility>
#include <vector>

namespace iterfix::lang {
namespace {

constexpr int kMaxNesting = 200;

struct SyntaxError {
  ParseFailure failure;
};

std::optional<BinaryOp> BinaryFor(TokenKind kind) {
  switch (kind) {
    case TokenKind::kPlus: return BinaryOp::kAdd;
    case TokenKind::kMinus: return BinaryOp::kSub;
    case TokenKind::kStar: return BinaryOp::kMul;
    case TokenKind::kSlash: return BinaryOp::kDiv;
    case TokenKind::kPercent: return BinaryOp::kMod;
    case TokenKind::kLt: return BinaryOp::kLt;
    case TokenKind::kLe: return BinaryOp::kLe;
    case TokenKind::kGt: return BinaryOp::kGt;
    case TokenKind::kGe: return BinaryOp::kGe;
    case TokenKind::kEq: return BinaryOp::kEq;
    case TokenKind::kNe: return BinaryOp::kNe;
    case TokenKind::kAndAnd: return BinaryOp::kAnd;
    case TokenKind::kOrOr: return BinaryOp::kOr;
    default: return std::nullopt;
  }
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string_view text)
      : tokens_(std::move(tokens)) {
    Token eof;
    eof.kind = TokenKind::kEof;
    eof.offset = text.size();
    int line = 1;
    int col = 1;
    for (char c : text) {
      if (c == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    eof.span = SourceSpan{line, col, line, col};
    tokens_.push_back(std::move(eof));
  }

  Ast ParseProgram() {
    Ast ast;
    while (!At(TokenKind::kEof)) {
      ast.functions.push_back(ParseFunction());
    }
    return ast;
  }

 private:
  const Token& Peek(size_t ahead = 0) const {
    size_t index = pos_ + ahead;
    return index < tokens_.size() ? tokens_[index] : tokens_.back();
  }

  bool At(TokenKind kind) const { return Peek().kind == kind; }

  const Token& Advance() {
    const Token& token = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return token;
  }

  [[noreturn]] void Fail(const std::string& expected) const {
    const Token& found = Peek();
    ParseFailure failure;
    failure.line = found.span.start_line;
    failure.col = found.span.start_col;
    failure.expected_token = expected;
    failure.message = "expected " + expected;
    if (found.kind == TokenKind::kEof) {
      failure.message += " at end of input";
    } else {
      failure.message += " before '" + found.lexeme + "'";
    }
    throw SyntaxError{std::move(failure)};
  }

  const Token& Expect(TokenKind kind) {
    if (!At(kind)) Fail(Describe(kind));
    return Advance();
  }

  void Enter() {
    if (++depth_ > kMaxNesting) {
      ParseFailure failure;
      failure.line = Peek().span.start_line;
      failure.col = Peek().span.start_col;
      failure.message = "nesting too deep";
      throw SyntaxError{std::move(failure)};
    }
  }

  void Leave() { --depth_; }

  static SourceSpan Join(const SourceSpan& first, const SourceSpan& last) {
    return SourceSpan{first.start_line, first.start_col, last.end_line, last.end_col};
  }

  Type ParseType() {
    if (At(TokenKind::kIntType)) {
      Advance();
      return Type::kInt;
    }
    if (At(TokenKind::kBoolType)) {
      Advance();
      return Type::kBool;
    }
    Fail("type");
  }

  FuncDecl ParseFunction() {
    FuncDecl fn;
    const Token& kw = Expect(TokenKind::kFn);
    SourceSpan start = kw.span;
    fn.name = Expect(TokenKind::kIdent).lexeme;
    Expect(TokenKind::kLParen);
    if (!At(TokenKind::kRParen)) {
      while (true) {
        Param param;
        const Token& name = Expect(TokenKind::kIdent);
        param.name = name.lexeme;
        Expect(TokenKind::kColon);
        SourceSpan type_span = Peek().span;
        param.type = ParseType();
        param.span = Join(name.span, type_span);
        fn.params.push_back(std::move(param));
        if (!At(TokenKind::kComma)) break;
        Advance();
      }
    }
    Expect(TokenKind::kRParen);
    Expect(TokenKind::kArrow);
    fn.return_type = ParseType();
    SourceSpan close;
    fn.body = ParseBlock(&close);
    fn.span = Join(start, close);
    return fn;
  }

  std::vector<Stmt> ParseBlock(SourceSpan* close) {
    Expect(TokenKind::kLBrace);
    Enter();
    std::vector<Stmt> body;
    while (!At(TokenKind::kRBrace)) {
      if (At(TokenKind::kEof)) Fail("'}'");
      body.push_back(ParseStatement());
    }
    Leave();
    *close = Advance().span;
    return body;
  }

  Stmt ParseStatement() {
    Stmt stmt;
    SourceSpan start = Peek().span;
    switch (Peek().kind) {
      case TokenKind::kLet: {
        Advance();
        stmt.kind = Stmt::Kind::kLet;
        stmt.name = Expect(TokenKind::kIdent).lexeme;
        Expect(TokenKind::kAssign);
        stmt.value = ParseExpr();
        stmt.span = Join(start, Expect(TokenKind::kSemi).span);
        return stmt;
      }
      case TokenKind::kIdent: {
        stmt.kind = Stmt::Kind::kAssign;
        stmt.name = Advance().lexeme;
        Expect(TokenKind::kAssign);
        stmt.value = ParseExpr();
        stmt.span = Join(start, Expect(TokenKind::kSemi).span);
        return stmt;
      }
      case TokenKind::kReturn: {
        Advance();
        stmt.kind = Stmt::Kind::kReturn;
        stmt.value = ParseExpr();
        stmt.span = Join(start, Expect(TokenKind::kSemi).span);
        return stmt;
      }
      case TokenKind::kIf:
      case TokenKind::kWhile: {
        bool is_if = At(TokenKind::kIf);
        Advance();
        stmt.kind = is_if ? Stmt::Kind::kIf : Stmt::Kind::kWhile;
        Expect(TokenKind::kLParen);
        stmt.value = ParseExpr();
        Expect(TokenKind::kRParen);
        SourceSpan close;
        stmt.body = ParseBlock(&close);
        if (is_if && At(TokenKind::kElse)) {
          Advance();
          stmt.has_else = true;
          stmt.else_body = ParseBlock(&close);
        }
        stmt.span = Join(start, close);
        return stmt;
      }
      default:
        Fail("statement");
    }
  }

  Expr ParseExpr(int min_precedence = 1) {
    Enter();
    Expr lhs = ParseUnary();
    while (true) {
      std::optional<BinaryOp> op = BinaryFor(Peek().kind);
      if (!op || Precedence(*op) < min_precedence) break;
      Advance();
      Expr rhs = ParseExpr(Precedence(*op) + 1);
      lhs = Expr::Binary(*op, std::move(lhs), std::move(rhs));
    }
    Leave();
    return lhs;
  }

  Expr ParseUnary() {
    if (At(TokenKind::kMinus) || At(TokenKind::kBang)) {
      Enter();
      const Token& op = Advance();
      SourceSpan start = op.span;
      UnaryOp kind = op.kind == TokenKind::kMinus ? UnaryOp::kNeg : UnaryOp::kNot;
      Expr operand = ParseUnary();
      Expr e = Expr::Unary(kind, std::move(operand));
      e.span = Join(start, e.operands[0].span);
      Leave();
      return e;
    }
    return ParsePrimary();
  }

  Expr ParsePrimary() {
    const Token& token = Peek();
    switch (token.kind) {
      case TokenKind::kIntLit: {
        int64_t value = 0;
        const std::string& digits = token.lexeme;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
          ParseFailure failure;
          failure.line = token.span.start_line;
          failure.col = token.span.start_col;
          failure.message = "integer literal out of range";
          throw SyntaxError{std::move(failure)};
        }
        Expr e = Expr::IntLit(value);
        e.span = Advance().span;
        return e;
      }
      case TokenKind::kTrue:
      case TokenKind::kFalse: {
        Expr e = Expr::BoolLit(token.kind == TokenKind::kTrue);
        e.span = Advance().span;
        return e;
      }
      case TokenKind::kIdent: {
        const Token& name = Advance();
        if (!At(TokenKind::kLParen)) {
          Expr e = Expr::Var(name.lexeme);
          e.span = name.span;
          return e;
        }
        Advance();
        Expr call;
        call.kind = Expr::Kind::kCall;
        call.name = name.lexeme;
        if (!At(TokenKind::kRParen)) {
          while (true) {
            call.operands.push_back(ParseExpr());
            if (!At(TokenKind::kComma)) break;
            Advance();
          }
        }
        call.span = Join(name.span, Expect(TokenKind::kRParen).span);
        return call;
      }
      case TokenKind::kLParen: {
        SourceSpan open = Advance().span;
        Expr inner = ParseExpr();
        inner.span = Join(open, Expect(TokenKind::kRParen).span);
        return inner;
      }
      default:
        Fail("expression");
    }
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

ParseResult Parse(std::string_view text) {
  LexResult lexed = Tokenize(text);
  if (auto* failure = std::get_if<LexFailure>(&lexed)) {
    ParseFailure out;
    out.line = failure->line;
    out.col = failure->col;
    out.message = failure->message;
    return out;
  }
  try {
    return Parser(std::move(std::get<std::vector<Token>>(lexed)), text).ParseProgram();
  } catch (const SyntaxError& error) {
    return error.failure;
  }
}

}  // namespace iterfix::lang

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

#ifndef ITERFIX_LANG_AST_H_
#define ITERFIX_LANG_AST_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lang/token.h"

namespace iterfix::lang {

enum class Type { kInt, kBool };

enum class UnaryOp { kNeg, kNot };

enum class BinaryOp {
  kAdd,
  kSub,
  kMul,
  kDiv,
  kMod,
  kLt,
  kLe,
  kGt,
  kGe,
  kEq,
  kNe,
  kAnd,
  kOr,
};

struct Expr {
  enum class Kind { kIntLit, kBoolLit, kVar, kCall, kUnary, kBinary };

  Kind kind = Kind::kIntLit;
  SourceSpan span;
  int64_t int_value = 0;
  bool bool_value = false;
  std::string name;  // variable or callee
  UnaryOp unary_op = UnaryOp::kNeg;
  BinaryOp binary_op = BinaryOp::kAdd;
  // Call arguments, the single unary operand, or the two binary operands.
  std::vector<Expr> operands;

  static Expr IntLit(int64_t value);
  static Expr BoolLit(bool value);
  static Expr Var(std::string name);
  static Expr Unary(UnaryOp op, Expr operand);
  static Expr Binary(BinaryOp op, Expr lhs, Expr rhs);
};

struct Stmt {
  enum class Kind { kLet, kAssign, kIf, kWhile, kReturn };

  Kind kind = Kind::kReturn;
  SourceSpan span;
  std::string name;  // let/assign target
  Expr value;        // let/assign/return value, or if/while condition
  std::vector<Stmt> body;
  std::vector<Stmt> else_body;
  bool has_else = false;
};

struct Param {
  std::string name;
  Type type = Type::kInt;
  SourceSpan span;
};

struct FuncDecl {
  std::string name;
  std::vector<Param> params;
  Type return_type = Type::kInt;
  std::vector<Stmt> body;
  SourceSpan span;
};

struct Ast {
  std::vector<FuncDecl> functions;
};

struct ParseFailure {
  int line = 1;
  int col = 1;
  std::string message;
  std::optional<std::string> expected_token;
};

std::string_view Spelling(BinaryOp op);
std::string_view Spelling(UnaryOp op);
std::string_view Spelling(Type type);

// Binding strength used by both the parser and the printer; larger binds
// tighter.
int Precedence(BinaryOp op);

// Operators that can stand in for `op` without changing operand types.
std::vector<BinaryOp> SameClassOperators(BinaryOp op);

// Line-oriented s-expression rendering that ignores spans. Two ASTs are
// structurally equal iff their dumps are equal.
std::string Dump(const Ast& ast);
std::string Dump(const Expr& expr);

bool StructurallyEqual(const Ast& a, const Ast& b);

}  // namespace iterfix::lang

#endif  // ITERFIX_LANG_AST_H_

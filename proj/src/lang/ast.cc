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

#include "lang/ast.h"

#include <utility>

namespace iterfix::lang {

Expr Expr::IntLit(int64_t value) {
  Expr e;
  e.kind = Kind::kIntLit;
  e.int_value = value;
  return e;
}

Expr Expr::BoolLit(bool value) {
  Expr e;
  e.kind = Kind::kBoolLit;
  e.bool_value = value;
  return e;
}

Expr Expr::Var(std::string name) {
  Expr e;
  e.kind = Kind::kVar;
  e.name = std::move(name);
  return e;
}

Expr Expr::Unary(UnaryOp op, Expr operand) {
  Expr e;
  e.kind = Kind::kUnary;
  e.unary_op = op;
  e.span = operand.span;
  e.operands.push_back(std::move(operand));
  return e;
}

Expr Expr::Binary(BinaryOp op, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = Kind::kBinary;
  e.binary_op = op;
  e.span = SourceSpan{lhs.span.start_line, lhs.span.start_col,
                      rhs.span.end_line, rhs.span.end_col};
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  return e;
}

std::string_view Spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kMod: return "%";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kGe: return ">=";
    case BinaryOp::kEq: return "==";
    case BinaryOp::kNe: return "!=";
    case BinaryOp::kAnd: return "&&";
    case BinaryOp::kOr: return "||";
  }
  return "?";
}

std::string_view Spelling(UnaryOp op) { return op == UnaryOp::kNeg ? "-" : "!"; }

std::string_view Spelling(Type type) { return type == Type::kInt ? "int" : "bool"; }

int Precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::kOr: return 1;
    case BinaryOp::kAnd: return 2;
    case BinaryOp::kEq:
    case BinaryOp::kNe: return 3;
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe: return 4;
    case BinaryOp::kAdd:
    case BinaryOp::kSub: return 5;
    case BinaryOp::kMul:
    case BinaryOp::kDiv:
    case BinaryOp::kMod: return 6;
  }
  return 0;
}

std::vector<BinaryOp> SameClassOperators(BinaryOp op) {
  static const std::vector<BinaryOp> kArith = {BinaryOp::kAdd, BinaryOp::kSub,
                                               BinaryOp::kMul, BinaryOp::kDiv,
                                               BinaryOp::kMod};
  static const std::vector<BinaryOp> kCompare = {BinaryOp::kLt, BinaryOp::kLe,
                                                 BinaryOp::kGt, BinaryOp::kGe,
                                                 BinaryOp::kEq, BinaryOp::kNe};
  static const std::vector<BinaryOp> kLogic = {BinaryOp::kAnd, BinaryOp::kOr};
  const std::vector<BinaryOp>* group = &kLogic;
  if (Precedence(op) >= 5) {
    group = &kArith;
  } else if (Precedence(op) >= 3) {
    group = &kCompare;
  }
  std::vector<BinaryOp> out;
  for (BinaryOp other : *group) {
    if (other != op) out.push_back(other);
  }
  return out;
}

namespace {

void DumpExpr(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::kIntLit:
      out += std::to_string(e.int_value);
      return;
    case Expr::Kind::kBoolLit:
      out += e.bool_value ? "true" : "false";
      return;
    case Expr::Kind::kVar:
      out += e.name;
      return;
    case Expr::Kind::kCall:
      out += "(call ";
      out += e.name;
      break;
    case Expr::Kind::kUnary:
      out += "(";
      out += e.unary_op == UnaryOp::kNeg ? "neg" : "not";
      break;
    case Expr::Kind::kBinary:
      out += "(";
      out += Spelling(e.binary_op);
      break;
  }
  for (const Expr& operand : e.operands) {
    out += ' ';
    DumpExpr(operand, out);
  }
  out += ')';
}

void DumpBlock(const std::vector<Stmt>& body, int depth, std::string& out);

void DumpStmt(const Stmt& s, int depth, std::string& out) {
  out.append(static_cast<size_t>(depth) * 2, ' ');
  switch (s.kind) {
    case Stmt::Kind::kLet:
    case Stmt::Kind::kAssign:
      out += s.kind == Stmt::Kind::kLet ? "(let " : "(assign ";
      out += s.name;
      out += ' ';
      DumpExpr(s.value, out);
      out += ")\n";
      return;
    case Stmt::Kind::kReturn:
      out += "(return ";
      DumpExpr(s.value, out);
      out += ")\n";
      return;
    case Stmt::Kind::kIf:
    case Stmt::Kind::kWhile:
      out += s.kind == Stmt::Kind::kIf ? "(if " : "(while ";
      DumpExpr(s.value, out);
      out += '\n';
      DumpBlock(s.body, depth + 1, out);
      if (s.has_else) {
        out.append(static_cast<size_t>(depth + 1) * 2, ' ');
        out += "else\n";
        DumpBlock(s.else_body, depth + 1, out);
      }
      out.append(static_cast<size_t>(depth) * 2, ' ');
      out += ")\n";
      return;
  }
}

void DumpBlock(const std::vector<Stmt>& body, int depth, std::string& out) {
  for (const Stmt& s : body) DumpStmt(s, depth, out);
}

}  // namespace

std::string Dump(const Expr& expr) {
  std::string out;
  DumpExpr(expr, out);
  return out;
}

std::string Dump(const Ast& ast) {
  std::string out = "(program\n";
  for (const FuncDecl& fn : ast.functions) {
    out += "  (fn " + fn.name + " (";
    for (size_t i = 0; i < fn.params.size(); ++i) {
      if (i > 0) out += ' ';
      out += "(" + fn.params[i].name + " " + std::string(Spelling(fn.params[i].type)) + ")";
    }
    out += ") " + std::string(Spelling(fn.return_type)) + "\n";
    DumpBlock(fn.body, 2, out);
    out += "  )\n";
  }
  out += ")\n";
  return out;
}

bool StructurallyEqual(const Ast& a, const Ast& b) { return Dump(a) == Dump(b); }

}  // namespace iterfix::lang

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

#include "lang/printer.h"

namespace iterfix::lang {
namespace {

constexpr int kUnaryPrecedence = 7;

int PrecedenceOf(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kBinary: return Precedence(e.binary_op);
    case Expr::Kind::kUnary: return kUnaryPrecedence;
    default: return kUnaryPrecedence + 1;
  }
}

void PrintInto(const Expr& e, int min_precedence, std::string& out) {
  bool parens = PrecedenceOf(e) < min_precedence;
  if (parens) out += '(';
  switch (e.kind) {
    case Expr::Kind::kIntLit:
      out += std::to_string(e.int_value);
      break;
    case Expr::Kind::kBoolLit:
      out += e.bool_value ? "true" : "false";
      break;
    case Expr::Kind::kVar:
      out += e.name;
      break;
    case Expr::Kind::kCall:
      out += e.name;
      out += '(';
      for (size_t i = 0; i < e.operands.size(); ++i) {
        if (i > 0) out += ", ";
        PrintInto(e.operands[i], 1, out);
      }
      out += ')';
      break;
    case Expr::Kind::kUnary:
      out += Spelling(e.unary_op);
      PrintInto(e.operands[0], kUnaryPrecedence, out);
      break;
    case Expr::Kind::kBinary: {
      int p = Precedence(e.binary_op);
      PrintInto(e.operands[0], p, out);
      out += ' ';
      out += Spelling(e.binary_op);
      out += ' ';
      PrintInto(e.operands[1], p + 1, out);
      break;
    }
  }
  if (parens) out += ')';
}

std::string Indent(int depth) { return std::string(static_cast<size_t>(depth) * 2, ' '); }

void PrintBlock(const std::vector<Stmt>& body, int depth, std::vector<std::string>& out) {
  for (const Stmt& s : body) {
    for (std::string& line : PrintStatement(s, depth)) out.push_back(std::move(line));
  }
}

}  // namespace

std::string PrintExpr(const Expr& expr) {
  std::string out;
  PrintInto(expr, 1, out);
  return out;
}

std::vector<std::string> PrintStatement(const Stmt& s, int depth) {
  std::vector<std::string> out;
  std::string pad = Indent(depth);
  switch (s.kind) {
    case Stmt::Kind::kLet:
      out.push_back(pad + "let " + s.name + " = " + PrintExpr(s.value) + ";");
      break;
    case Stmt::Kind::kAssign:
      out.push_back(pad + s.name + " = " + PrintExpr(s.value) + ";");
      break;
    case Stmt::Kind::kReturn:
      out.push_back(pad + "return " + PrintExpr(s.value) + ";");
      break;
    case Stmt::Kind::kIf:
    case Stmt::Kind::kWhile:
      out.push_back(pad + (s.kind == Stmt::Kind::kIf ? "if (" : "while (") +
                    PrintExpr(s.value) + ") {");
      PrintBlock(s.body, depth + 1, out);
      if (s.has_else) {
        out.push_back(pad + "} else {");
        PrintBlock(s.else_body, depth + 1, out);
      }
      out.push_back(pad + "}");
      break;
  }
  return out;
}

std::string Print(const Ast& ast) {
  std::vector<std::string> lines;
  for (size_t i = 0; i < ast.functions.size(); ++i) {
    const FuncDecl& fn = ast.functions[i];
    if (i > 0) lines.emplace_back();
    std::string header = "fn " + fn.name + "(";
    for (size_t j = 0; j < fn.params.size(); ++j) {
      if (j > 0) header += ", ";
      header += fn.params[j].name + ": " + std::string(Spelling(fn.params[j].type));
    }
    header += ") -> " + std::string(Spelling(fn.return_type)) + " {";
    lines.push_back(std::move(header));
    PrintBlock(fn.body, 1, lines);
    lines.emplace_back("}");
  }
  std::string text;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) text += '\n';
    text += lines[i];
  }
  return text;
}

}  // namespace iterfix::lang

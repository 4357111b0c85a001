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

#include "perturb/perturb.h"

#include <algorithm>
#include <map>

#include "lang/printer.h"
#include "lang/scope.h"

namespace iterfix::perturb {

using lang::Expr;
using lang::Stmt;

namespace {

struct OpInfo {
  PerturbOp op;
  std::string_view name;
};

constexpr OpInfo kOps[] = {
    {PerturbOp::kReplaceBinop, "replace-binop"},
    {PerturbOp::kOffByOneLiteral, "off-by-one-literal"},
    {PerturbOp::kWrongVariable, "wrong-variable"},
    {PerturbOp::kNegateCondition, "negate-condition"},
    {PerturbOp::kSwapCallArgs, "swap-call-args"},
    {PerturbOp::kDeleteStatement, "delete-statement"},
    {PerturbOp::kRemoveDelimiter, "remove-delimiter"},
    {PerturbOp::kDropElse, "drop-else"},
    {PerturbOp::kCorruptKeyword, "corrupt-keyword"},
};

struct ExprSite {
  const Expr* expr;
  const Stmt* stmt;
  bool is_condition_root;
  std::vector<lang::Binding> visible;
};

std::vector<lang::Binding> Visible(const lang::Scope& scope) {
  std::vector<lang::Binding> out;
  for (const lang::Binding& b : scope) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const lang::Binding& o) { return o.name == b.name; });
    if (it == out.end()) {
      out.push_back(b);
    } else {
      it->type = b.type;
    }
  }
  return out;
}

std::vector<ExprSite> ExprSites(const lang::Ast& ast) {
  std::vector<ExprSite> sites;
  lang::SignatureTable signatures = lang::Signatures(ast);
  lang::WalkStatements(ast, signatures,
                       [&](const lang::FuncDecl&, const Stmt& s, const lang::Scope& scope) {
                         std::vector<lang::Binding> visible = Visible(scope);
                         bool condition = s.kind == Stmt::Kind::kIf ||
                                          s.kind == Stmt::Kind::kWhile;
                         lang::WalkExpr(s.value, [&](const Expr& e) {
                           sites.push_back(ExprSite{&e, &s, condition && &e == &s.value,
                                                    visible});
                         });
                       });
  return sites;
}

Expr* NthExpr(lang::Ast& ast, size_t n) {
  Expr* found = nullptr;
  size_t counter = 0;
  lang::SignatureTable signatures = lang::Signatures(ast);
  lang::WalkStatements(ast, signatures, [&](lang::FuncDecl&, Stmt& s, const lang::Scope&) {
    lang::WalkExpr(s.value, [&](Expr& e) {
      if (counter++ == n) found = &e;
    });
  });
  return found;
}

template <typename F>
bool ForNthStmt(std::vector<Stmt>& body, size_t& counter, size_t n, F& f) {
  for (size_t i = 0; i < body.size(); ++i) {
    if (counter++ == n) {
      f(body, i);
      return true;
    }
    if (ForNthStmt(body[i].body, counter, n, f)) return true;
    if (ForNthStmt(body[i].else_body, counter, n, f)) return true;
  }
  return false;
}

template <typename F>
void WithNthStmt(lang::Ast& ast, size_t n, F f) {
  size_t counter = 0;
  for (lang::FuncDecl& fn : ast.functions) {
    if (ForNthStmt(fn.body, counter, n, f)) return;
  }
}

std::vector<Mutant> StatementMutants(const lang::Ast& ast, PerturbOp op) {
  std::vector<Mutant> out;
  std::vector<const Stmt*> stmts;
  lang::WalkStatements(ast, lang::Signatures(ast),
                       [&](const lang::FuncDecl&, const Stmt& s, const lang::Scope&) {
                         stmts.push_back(&s);
                       });
  for (size_t n = 0; n < stmts.size(); ++n) {
    if (op == PerturbOp::kDropElse && !stmts[n]->has_else) continue;
    lang::Ast copy = ast;
    WithNthStmt(copy, n, [&](std::vector<Stmt>& body, size_t i) {
      if (op == PerturbOp::kDeleteStatement) {
        body.erase(body.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        body[i].has_else = false;
        body[i].else_body.clear();
      }
    });
    out.push_back(Mutant{lang::Print(copy), stmts[n]->span.start_line});
  }
  return out;
}

std::vector<Mutant> TokenMutants(const lang::SourceProgram& program, PerturbOp op) {
  std::vector<Mutant> out;
  lang::LexResult lexed = lang::Tokenize(program.text());
  const auto* tokens = std::get_if<std::vector<lang::Token>>(&lexed);
  if (tokens == nullptr) return out;
  for (const lang::Token& token : *tokens) {
    using lang::TokenKind;
    std::vector<std::string> lines = program.lines();
    std::string& line = lines[static_cast<size_t>(token.span.start_line - 1)];
    size_t col = static_cast<size_t>(token.span.start_col - 1);
    if (op == PerturbOp::kRemoveDelimiter) {
      if (token.kind != TokenKind::kSemi && token.kind != TokenKind::kRParen &&
          token.kind != TokenKind::kRBrace) {
        continue;
      }
      line.erase(col, token.lexeme.size());
      while (!line.empty() && line.back() == ' ') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) {
        lines.erase(lines.begin() + (token.span.start_line - 1));
      }
    } else {
      static const TokenKind kCorruptible[] = {TokenKind::kFn,    TokenKind::kLet,
                                               TokenKind::kIf,    TokenKind::kElse,
                                               TokenKind::kWhile, TokenKind::kReturn};
      if (std::find(std::begin(kCorruptible), std::end(kCorruptible), token.kind) ==
          std::end(kCorruptible)) {
        continue;
      }
      std::string word = token.lexeme;
      std::swap(word[word.size() - 1], word[word.size() - 2]);
      line.replace(col, token.lexeme.size(), word);
    }
    out.push_back(Mutant{lang::JoinLines(lines), token.span.start_line});
  }
  return out;
}

}  // namespace

const std::vector<PerturbOp>& AllOps() {
  static const std::vector<PerturbOp> ops = [] {
    std::vector<PerturbOp> v;
    for (const OpInfo& info : kOps) v.push_back(info.op);
    return v;
  }();
  return ops;
}

std::string_view OpName(PerturbOp op) {
  for (const OpInfo& info : kOps) {
    if (info.op == op) return info.name;
  }
  return "unknown";
}

std::optional<PerturbOp> OpFromName(std::string_view name) {
  for (const OpInfo& info : kOps) {
    if (info.name == name) return info.op;
  }
  return std::nullopt;
}

bool IsLinePreserving(PerturbOp op) {
  switch (op) {
    case PerturbOp::kReplaceBinop:
    case PerturbOp::kOffByOneLiteral:
    case PerturbOp::kWrongVariable:
    case PerturbOp::kNegateCondition:
    case PerturbOp::kSwapCallArgs:
      return true;
    default:
      return false;
  }
}

std::vector<AstMutation> ExprMutations(const lang::Ast& ast, PerturbOp op) {
  std::vector<AstMutation> out;
  if (!IsLinePreserving(op)) return out;
  std::vector<ExprSite> sites = ExprSites(ast);
  for (size_t ordinal = 0; ordinal < sites.size(); ++ordinal) {
    const ExprSite& site = sites[ordinal];
    const Expr& e = *site.expr;
    auto add = [&](std::function<void(Expr&)> apply) {
      out.push_back(AstMutation{op, ordinal, e.span.start_line, e.span.start_col,
                                std::move(apply)});
    };
    switch (op) {
      case PerturbOp::kReplaceBinop:
        if (e.kind != Expr::Kind::kBinary) break;
        for (lang::BinaryOp alt : lang::SameClassOperators(e.binary_op)) {
          add([alt](Expr& x) { x.binary_op = alt; });
        }
        break;
      case PerturbOp::kOffByOneLiteral:
        if (e.kind != Expr::Kind::kIntLit) break;
        if (e.int_value < INT64_MAX) add([](Expr& x) { x.int_value += 1; });
        if (e.int_value > 0) add([](Expr& x) { x.int_value -= 1; });
        break;
      case PerturbOp::kWrongVariable: {
        if (e.kind != Expr::Kind::kVar) break;
        auto self = std::find_if(site.visible.begin(), site.visible.end(),
                                 [&](const lang::Binding& b) { return b.name == e.name; });
        if (self == site.visible.end()) break;
        for (const lang::Binding& other : site.visible) {
          if (other.name == e.name || other.type != self->type) continue;
          std::string name = other.name;
          add([name](Expr& x) { x.name = name; });
        }
        break;
      }
      case PerturbOp::kNegateCondition:
        if (!site.is_condition_root) break;
        add([](Expr& x) {
          if (x.kind == Expr::Kind::kUnary && x.unary_op == lang::UnaryOp::kNot) {
            Expr inner = x.operands[0];
            x = std::move(inner);
          } else {
            x = Expr::Unary(lang::UnaryOp::kNot, x);
          }
        });
        break;
      case PerturbOp::kSwapCallArgs:
        if (e.kind != Expr::Kind::kCall) break;
        for (size_t a = 0; a < e.operands.size(); ++a) {
          for (size_t b = a + 1; b < e.operands.size(); ++b) {
            add([a, b](Expr& x) { std::swap(x.operands[a], x.operands[b]); });
          }
        }
        break;
      default:
        break;
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const AstMutation& a, const AstMutation& b) {
    if (a.line != b.line) return a.line < b.line;
    return a.col < b.col;
  });
  return out;
}

lang::Ast ApplyMutations(const lang::Ast& ast, std::vector<const AstMutation*> mutations) {
  std::sort(mutations.begin(), mutations.end(),
            [](const AstMutation* a, const AstMutation* b) { return a->ordinal > b->ordinal; });
  lang::Ast copy = ast;
  for (const AstMutation* m : mutations) {
    if (Expr* target = NthExpr(copy, m->ordinal)) m->apply(*target);
  }
  return copy;
}

std::vector<Mutant> PerturbSites(const lang::SourceProgram& program, PerturbOp op) {
  std::vector<Mutant> mutants;
  if (op == PerturbOp::kRemoveDelimiter || op == PerturbOp::kCorruptKeyword) {
    mutants = TokenMutants(program, op);
  } else if (program.parsed()) {
    const lang::Ast& ast = program.ast();
    if (op == PerturbOp::kDeleteStatement || op == PerturbOp::kDropElse) {
      mutants = StatementMutants(ast, op);
    } else {
      for (const AstMutation& m : ExprMutations(ast, op)) {
        mutants.push_back(Mutant{lang::Print(ApplyMutations(ast, {&m})), m.line});
      }
    }
  }
  std::string original = lang::TokenKey(program.text());
  std::erase_if(mutants, [&](const Mutant& m) { return lang::TokenKey(m.text) == original; });
  return mutants;
}

}  // namespace iterfix::perturb

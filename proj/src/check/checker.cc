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

#include "check/checker.h"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "common/errors.h"
#include "lang/scope.h"

namespace iterfix::check {

using lang::BinaryOp;
using lang::Expr;
using lang::Stmt;
using lang::Type;

std::string_view KindName(DiagKind kind) {
  switch (kind) {
    case DiagKind::kParseError: return "parse-error";
    case DiagKind::kUndefinedVariable: return "undefined-variable";
    case DiagKind::kUndefinedFunction: return "undefined-function";
    case DiagKind::kArityMismatch: return "arity-mismatch";
    case DiagKind::kTypeMismatch: return "type-mismatch";
    case DiagKind::kDuplicateDefinition: return "duplicate-definition";
    case DiagKind::kMissingReturn: return "missing-return";
  }
  return "unknown";
}

namespace {

std::string TypeName(Type t) { return std::string(lang::Spelling(t)); }

class Checker {
 public:
  explicit Checker(const lang::Ast& ast) : ast_(ast) {}

  std::vector<CompileDiagnostic> Run() {
    std::set<std::string> seen;
    for (const lang::FuncDecl& fn : ast_.functions) {
      if (!seen.insert(fn.name).second) {
        Report(DiagKind::kDuplicateDefinition, fn.span.start_line,
               "duplicate definition of function '" + fn.name + "'");
      } else {
        lang::Signature sig;
        for (const lang::Param& p : fn.params) sig.params.push_back(p.type);
        sig.result = fn.return_type;
        signatures_.emplace(fn.name, std::move(sig));
      }
    }
    for (const lang::FuncDecl& fn : ast_.functions) CheckFunction(fn);
    std::stable_sort(diagnostics_.begin(), diagnostics_.end(),
                     [](const CompileDiagnostic& a, const CompileDiagnostic& b) {
                       if (a.line != b.line) return a.line < b.line;
                       return a.kind < b.kind;
                     });
    return std::move(diagnostics_);
  }

 private:
  // A binding with no type came from an ill-typed initializer; it suppresses
  // follow-on errors.
  struct Var {
    std::string name;
    std::optional<Type> type;
  };

  void Report(DiagKind kind, int line, std::string message) {
    diagnostics_.push_back(CompileDiagnostic{kind, line, std::move(message)});
  }

  const Var* Find(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->name == name) return &*it;
    }
    return nullptr;
  }

  void CheckFunction(const lang::FuncDecl& fn) {
    scope_.clear();
    return_type_ = fn.return_type;
    for (const lang::Param& p : fn.params) {
      if (Find(p.name) != nullptr) {
        Report(DiagKind::kDuplicateDefinition, p.span.start_line,
               "duplicate definition of parameter '" + p.name + "'");
        continue;
      }
      scope_.push_back(Var{p.name, p.type});
    }
    CheckBlock(fn.body);
    if (fn.body.empty() || fn.body.back().kind != Stmt::Kind::kReturn) {
      Report(DiagKind::kMissingReturn, fn.span.end_line,
             "missing return at end of function '" + fn.name + "'");
    }
  }

  void CheckBlock(const std::vector<Stmt>& body) {
    size_t mark = scope_.size();
    for (const Stmt& s : body) CheckStatement(s);
    scope_.resize(mark);
  }

  void CheckStatement(const Stmt& s) {
    int line = s.span.start_line;
    switch (s.kind) {
      case Stmt::Kind::kLet: {
        std::optional<Type> type = TypeOf(s.value);
        if (Find(s.name) != nullptr) {
          Report(DiagKind::kDuplicateDefinition, line,
                 "duplicate definition of variable '" + s.name + "'");
          return;
        }
        scope_.push_back(Var{s.name, type});
        return;
      }
      case Stmt::Kind::kAssign: {
        std::optional<Type> type = TypeOf(s.value);
        const Var* target = Find(s.name);
        if (target == nullptr) {
          Report(DiagKind::kUndefinedVariable, line,
                 "undefined variable '" + s.name + "'");
        } else if (type && target->type && *type != *target->type) {
          Report(DiagKind::kTypeMismatch, line,
                 "cannot assign " + TypeName(*type) + " to '" + s.name +
                     "' of type " + TypeName(*target->type));
        }
        return;
      }
      case Stmt::Kind::kReturn: {
        std::optional<Type> type = TypeOf(s.value);
        if (type && *type != return_type_) {
          Report(DiagKind::kTypeMismatch, line,
                 "return of " + TypeName(*type) + " in function returning " +
                     TypeName(return_type_));
        }
        return;
      }
      case Stmt::Kind::kIf:
      case Stmt::Kind::kWhile: {
        std::optional<Type> type = TypeOf(s.value);
        if (type && *type != Type::kBool) {
          Report(DiagKind::kTypeMismatch, s.value.span.start_line,
                 std::string(s.kind == Stmt::Kind::kIf ? "if" : "while") +
                     " condition must be bool, got " + TypeName(*type));
        }
        CheckBlock(s.body);
        CheckBlock(s.else_body);
        return;
      }
    }
  }

  void Expect(const Expr& e, std::optional<Type> actual, Type wanted,
              const std::string& what) {
    if (actual && *actual != wanted) {
      Report(DiagKind::kTypeMismatch, e.span.start_line,
             what + " expects " + TypeName(wanted) + ", got " + TypeName(*actual));
    }
  }

  std::optional<Type> TypeOf(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::kIntLit: return Type::kInt;
      case Expr::Kind::kBoolLit: return Type::kBool;
      case Expr::Kind::kVar: {
        const Var* var = Find(e.name);
        if (var == nullptr) {
          Report(DiagKind::kUndefinedVariable, e.span.start_line,
                 "undefined variable '" + e.name + "'");
          return std::nullopt;
        }
        return var->type;
      }
      case Expr::Kind::kCall: {
        std::vector<std::optional<Type>> args;
        for (const Expr& arg : e.operands) args.push_back(TypeOf(arg));
        auto it = signatures_.find(e.name);
        if (it == signatures_.end()) {
          Report(DiagKind::kUndefinedFunction, e.span.start_line,
                 "undefined function '" + e.name + "'");
          return std::nullopt;
        }
        const lang::Signature& sig = it->second;
        if (sig.params.size() != args.size()) {
          Report(DiagKind::kArityMismatch, e.span.start_line,
                 "function '" + e.name + "' expects " +
                     std::to_string(sig.params.size()) + " arguments, got " +
                     std::to_string(args.size()));
          return sig.result;
        }
        for (size_t i = 0; i < args.size(); ++i) {
          Expect(e.operands[i], args[i], sig.params[i],
                 "argument " + std::to_string(i + 1) + " of '" + e.name + "'");
        }
        return sig.result;
      }
      case Expr::Kind::kUnary: {
        std::optional<Type> operand = TypeOf(e.operands[0]);
        Type wanted = e.unary_op == lang::UnaryOp::kNeg ? Type::kInt : Type::kBool;
        Expect(e, operand, wanted,
               "operator '" + std::string(lang::Spelling(e.unary_op)) + "'");
        return wanted;
      }
      case Expr::Kind::kBinary: {
        std::optional<Type> lhs = TypeOf(e.operands[0]);
        std::optional<Type> rhs = TypeOf(e.operands[1]);
        BinaryOp op = e.binary_op;
        std::string what = "operator '" + std::string(lang::Spelling(op)) + "'";
        if (op == BinaryOp::kEq || op == BinaryOp::kNe) {
          if (lhs && rhs && *lhs != *rhs) {
            Report(DiagKind::kTypeMismatch, e.span.start_line,
                   what + " compares " + TypeName(*lhs) + " with " + TypeName(*rhs));
          }
          return Type::kBool;
        }
        int p = lang::Precedence(op);
        Type operand_type = p >= 3 ? Type::kInt : Type::kBool;
        if (lhs && rhs && *lhs != operand_type && *rhs != operand_type) {
          Report(DiagKind::kTypeMismatch, e.span.start_line,
                 what + " expects " + TypeName(operand_type) + " operands, got " +
                     TypeName(*lhs) + " and " + TypeName(*rhs));
        } else {
          Expect(e, lhs, operand_type, what);
          Expect(e, rhs, operand_type, what);
        }
        return p >= 5 ? Type::kInt : Type::kBool;
      }
    }
    return std::nullopt;
  }

  const lang::Ast& ast_;
  lang::SignatureTable signatures_;
  std::vector<Var> scope_;
  Type return_type_ = Type::kInt;
  std::vector<CompileDiagnostic> diagnostics_;
};

}  // namespace

std::vector<CompileDiagnostic> Check(const lang::SourceProgram& program) {
  if (!program.parsed()) {
    const lang::ParseFailure& failure = program.failure();
    return {CompileDiagnostic{DiagKind::kParseError, failure.line, failure.message}};
  }
  return Checker(program.ast()).Run();
}

int FirstCeLocation(const std::vector<CompileDiagnostic>& diagnostics, int line_count) {
  if (diagnostics.empty()) throw ContractError("FirstCeLocation: no diagnostics");
  int line = diagnostics.front().line;
  return std::clamp(line, 1, std::max(1, line_count));
}

std::string Render(const CompileDiagnostic& d) {
  return "[CE] line " + std::to_string(d.line) + ": " + std::string(KindName(d.kind)) +
         ": " + d.message;
}

}  // namespace iterfix::check

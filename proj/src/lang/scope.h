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

#ifndef ITERFIX_LANG_SCOPE_H_
#define ITERFIX_LANG_SCOPE_H_

#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "lang/ast.h"

namespace iterfix::lang {

struct Binding {
  std::string name;
  Type type = Type::kInt;
};

// Bindings visible at a program point, outermost first.
using Scope = std::vector<Binding>;

struct Signature {
  std::vector<Type> params;
  Type result = Type::kInt;
};

using SignatureTable = std::map<std::string, Signature>;

// First declaration wins on duplicates.
SignatureTable Signatures(const Ast& ast);

const Binding* Lookup(const Scope& scope, const std::string& name);

// Best-effort typing; nullopt when the expression is ill-typed or unknown.
std::optional<Type> InferType(const Expr& expr, const Scope& scope,
                              const SignatureTable& signatures);

namespace detail {

template <typename FuncT, typename StmtT, typename Visitor>
struct StatementWalker {
  const SignatureTable& signatures;
  Visitor& visit;

  void Block(FuncT& fn, std::conditional_t<std::is_const_v<StmtT>,
                                           const std::vector<Stmt>,
                                           std::vector<Stmt>>& body,
             Scope& scope) {
    size_t mark = scope.size();
    for (StmtT& s : body) {
      visit(fn, s, static_cast<const Scope&>(scope));
      if (s.kind == Stmt::Kind::kIf || s.kind == Stmt::Kind::kWhile) {
        Block(fn, s.body, scope);
        Block(fn, s.else_body, scope);
      } else if (s.kind == Stmt::Kind::kLet) {
        if (auto type = InferType(s.value, scope, signatures)) {
          scope.push_back(Binding{s.name, *type});
        }
      }
    }
    scope.resize(mark);
  }
};

}  // namespace detail

// Visits every statement (pre-order, declaration order) together with the
// bindings visible just before it. Works for const and mutable ASTs so that
// the visitation order can be used as a stable site numbering.
template <typename AstT, typename Visitor>
void WalkStatements(AstT& ast, const SignatureTable& signatures, Visitor&& visit) {
  using StmtT = std::conditional_t<std::is_const_v<AstT>, const Stmt, Stmt>;
  using FuncT = std::conditional_t<std::is_const_v<AstT>, const FuncDecl, FuncDecl>;
  detail::StatementWalker<FuncT, StmtT, std::remove_reference_t<Visitor>> walker{
      signatures, visit};
  for (FuncT& fn : ast.functions) {
    Scope scope;
    for (const Param& p : fn.params) scope.push_back(Binding{p.name, p.type});
    walker.Block(fn, fn.body, scope);
  }
}

// Pre-order traversal of an expression tree.
template <typename ExprT, typename Visitor>
void WalkExpr(ExprT& expr, Visitor&& visit) {
  visit(expr);
  for (auto& operand : expr.operands) WalkExpr(operand, visit);
}

}  // namespace iterfix::lang

#endif  // ITERFIX_LANG_SCOPE_H_

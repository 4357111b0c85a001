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

#include "lang/scope.h"

namespace iterfix::lang {

SignatureTable Signatures(const Ast& ast) {
  SignatureTable table;
  for (const FuncDecl& fn : ast.functions) {
    Signature sig;
    for (const Param& p : fn.params) sig.params.push_back(p.type);
    sig.result = fn.return_type;
    table.emplace(fn.name, std::move(sig));
  }
  return table;
}

const Binding* Lookup(const Scope& scope, const std::string& name) {
  for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
    if (it->name == name) return &*it;
  }
  return nullptr;
}

std::optional<Type> InferType(const Expr& e, const Scope& scope,
                              const SignatureTable& signatures) {
  switch (e.kind) {
    case Expr::Kind::kIntLit: return Type::kInt;
    case Expr::Kind::kBoolLit: return Type::kBool;
    case Expr::Kind::kVar: {
      const Binding* b = Lookup(scope, e.name);
      if (b == nullptr) return std::nullopt;
      return b->type;
    }
    case Expr::Kind::kCall: {
      auto it = signatures.find(e.name);
      if (it == signatures.end()) return std::nullopt;
      return it->second.result;
    }
    case Expr::Kind::kUnary:
      return e.unary_op == UnaryOp::kNeg ? Type::kInt : Type::kBool;
    case Expr::Kind::kBinary:
      return Precedence(e.binary_op) >= 5 ? Type::kInt : Type::kBool;
  }
  return std::nullopt;
}

}  // namespace iterfix::lang

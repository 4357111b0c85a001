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

#include "gen/context.h"

#include <algorithm>

namespace iterfix::gen {

bool IsCompileDiagnostic(std::string_view diagnostic) {
  return diagnostic.substr(0, 4) == "[CE]";
}

std::string DiagClass(std::string_view diagnostic) {
  if (IsCompileDiagnostic(diagnostic)) {
    size_t colon = diagnostic.find(": ");
    if (colon == std::string_view::npos) return "other-ce";
    std::string_view rest = diagnostic.substr(colon + 2);
    for (std::string_view kind :
         {"parse-error", "undefined-variable", "type-mismatch", "arity-mismatch"}) {
      if (rest.substr(0, kind.size()) == kind) return std::string(kind);
    }
    return "other-ce";
  }
  std::string_view rest = diagnostic.substr(std::min<size_t>(5, diagnostic.size()));
  if (rest.substr(0, 13) == "runtime-error") return "fe-runtime-error";
  if (rest.substr(0, 7) == "timeout") return "fe-timeout";
  return "fe-assert-fail";
}

RepairContext MakeContext(const lang::SourceProgram& source, int target_line,
                          std::string diagnostic) {
  RepairContext ctx;
  ctx.source = source;
  ctx.target_line = target_line;
  ctx.diagnostic = std::move(diagnostic);
  int first = std::max(1, target_line - kContextRadius);
  int last = std::min(source.line_count(), target_line + kContextRadius);
  for (int line = first; line <= last; ++line) {
    ctx.context_window.push_back(source.lines()[static_cast<size_t>(line - 1)]);
  }
  if (source.parsed()) {
    const lang::Ast& ast = source.ast();
    lang::SignatureTable signatures = lang::Signatures(ast);
    lang::WalkStatements(ast, signatures,
                         [&](const lang::FuncDecl& fn, const lang::Stmt& s,
                             const lang::Scope& scope) {
                           if (fn.span.start_line > target_line ||
                               fn.span.end_line < target_line) {
                             return;
                           }
                           if (s.span.start_line <= target_line) ctx.in_scope_vars = scope;
                         });
  }
  return ctx;
}

}  // namespace iterfix::gen

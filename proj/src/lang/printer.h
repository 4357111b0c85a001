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

#ifndef ITERFIX_LANG_PRINTER_H_
#define ITERFIX_LANG_PRINTER_H_

#include <string>
#include <vector>

#include "lang/ast.h"

namespace iterfix::lang {

// Canonical form: one statement per line, two spaces per block depth,
// functions separated by one blank line, no trailing newline.
std::string Print(const Ast& ast);

// Canonical lines for one statement at the given block depth.
std::vector<std::string> PrintStatement(const Stmt& stmt, int depth);

// Minimal-parenthesis rendering of an expression.
std::string PrintExpr(const Expr& expr);

}  // namespace iterfix::lang

#endif  // ITERFIX_LANG_PRINTER_H_

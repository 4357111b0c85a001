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

#ifndef ITERFIX_PERTURB_PERTURB_H_
#define ITERFIX_PERTURB_PERTURB_H_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lang/source.h"

namespace iterfix::perturb {

enum class PerturbOp {
  kReplaceBinop,
  kOffByOneLiteral,
  kWrongVariable,
  kNegateCondition,
  kSwapCallArgs,
  kDeleteStatement,
  kRemoveDelimiter,
  kDropElse,
  kCorruptKeyword,
};

const std::vector<PerturbOp>& AllOps();
std::string_view OpName(PerturbOp op);
std::optional<PerturbOp> OpFromName(std::string_view name);

// Ops that edit a single expression in place and never move lines; these
// are the ones composed into multi-location bugs.
bool IsLinePreserving(PerturbOp op);

struct Mutant {
  std::string text;
  int site_line = 1;
};

// Mutated sources for every applicable site, ordered by (line, column).
// Candidates that are token-identical to the input are skipped.
std::vector<Mutant> PerturbSites(const lang::SourceProgram& program, PerturbOp op);

// An expression-level edit addressed by pre-order position, so several can
// be applied to one AST (highest ordinal first).
struct AstMutation {
  PerturbOp op = PerturbOp::kReplaceBinop;
  size_t ordinal = 0;
  int line = 1;
  int col = 1;
  std::function<void(lang::Expr&)> apply;
};

// Line-preserving mutations of a parsed program in site order.
std::vector<AstMutation> ExprMutations(const lang::Ast& ast, PerturbOp op);

// Applies the mutations (any order; they are sorted internally) to a copy.
lang::Ast ApplyMutations(const lang::Ast& ast, std::vector<const AstMutation*> mutations);

}  // namespace iterfix::perturb

#endif  // ITERFIX_PERTURB_PERTURB_H_

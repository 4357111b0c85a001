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

#ifndef ITERFIX_LANG_PARSER_H_
#define ITERFIX_LANG_PARSER_H_

#include <string_view>
#include <variant>

#include "lang/ast.h"

namespace iterfix::lang {

using ParseResult = std::variant<Ast, ParseFailure>;

// Recursive-descent parse with first-error reporting. Never throws on bad
// input; every failure is returned as a ParseFailure.
ParseResult Parse(std::string_view text);

}  // namespace iterfix::lang

#endif  // ITERFIX_LANG_PARSER_H_

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

#include "gen/templates.h"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "lang/printer.h"

namespace iterfix::gen {

using lang::BinaryOp;
using lang::Expr;
using lang::Stmt;

int EditDistance(std::string_view a, std::string_view b) {
  size_t n = a.size();
  size_t m = b.size();
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(m + 1, 0));
  for (size_t i = 0; i <= n; ++i) d[i][0] = static_cast<int>(i);
  for (size_t j = 0; j <= m; ++j) d[0][j] = static_cast<int>(j);
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      int cost = a[i - 1] == b[j - 1] ? 0 : 1;
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + cost});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
        d[i][j] = std::min(d[i][j], d[i - 2][j - 2] + 1);
      }
    }
  }
  return d[n][m];
}

namespace {

std::string IndentOf(const std::string& line) {
  size_t n = line.find_first_not_of(" \t");
  return line.substr(0, n == std::string::npos ? line.size() : n);
}

std::string TrimRight(std::string s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  return s;
}

bool IsBlank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Text between `marker'` and the next quote, e.g. the token in "expected ';'".
std::optional<std::string> Quoted(std::string_view text, std::string_view marker) {
  size_t at = text.find(marker);
  if (at == std::string_view::npos) return std::nullopt;
  size_t start = at + marker.size();
  size_t end = text.find('\'', start);
  if (end == std::string_view::npos || end == start) return std::nullopt;
  return std::string(text.substr(start, end - start));
}

bool IsPunctuation(const std::string& s) {
  return !s.empty() && std::none_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

std::vector<lang::Token> LexLine(const std::string& line) {
  lang::LexResult lexed = lang::Tokenize(line);
  if (auto* tokens = std::get_if<std::vector<lang::Token>>(&lexed)) return *tokens;
  return {};
}

class Generator {
 public:
  explicit Generator(const RepairContext& ctx)
      : ctx_(ctx), lines_(ctx.source.lines()), target_(ctx.target_line) {}

  std::vector<CandidatePatch> Run() {
    if (target_ < 1 || target_ > static_cast<int>(lines_.size())) return {};
    if (IsCompileDiagnostic(ctx_.diagnostic)) TextTemplates();
    if (ctx_.source.parsed()) StatementTemplates();
    return std::move(out_);
  }

 private:
  const std::string& Line(int n) const { return lines_[static_cast<size_t>(n - 1)]; }

  void Emit(int start, int end, std::vector<std::string> replacement, std::string id) {
    CandidatePatch patch;
    patch.start_line = start;
    patch.end_line = end;
    patch.replacement = std::move(replacement);
    patch.template_id = std::move(id);
    out_.push_back(std::move(patch));
  }

  int PreviousNonBlank(int line) const {
    for (int n = line - 1; n >= 1; --n) {
      if (!IsBlank(Line(n))) return n;
    }
    return 0;
  }

  // ---- text templates -------------------------------------------------

  void TextTemplates() {
    const std::string& diag = ctx_.diagnostic;
    bool parse_error = DiagClass(diag) == "parse-error";
    if (parse_error) {
      std::optional<std::string> expected = Quoted(diag, "expected '");
      if (expected && IsPunctuation(*expected)) InsertDelimiter(*expected, Quoted(diag, "before '"));
      InsertSemicolon();
      DeleteStrayToken();
    }
    RenameToNearest();
  }

  void InsertDelimiter(const std::string& delim, const std::optional<std::string>& found) {
    const std::string id = "insert-missing-delimiter";
    const std::string& line = Line(target_);
    if (found) {
      for (const lang::Token& token : LexLine(line)) {
        if (token.lexeme != *found) continue;
        std::string edited = line;
        edited.insert(token.offset, delim);
        Emit(target_, target_, {edited}, id + ":before");
        break;
      }
    }
    Emit(target_, target_, {TrimRight(line) + delim}, id + ":eol");
    if (int prev = PreviousNonBlank(target_); prev > 0) {
      Emit(prev, prev, {TrimRight(Line(prev)) + delim}, id + ":prev-eol");
    }
    std::string indent = IndentOf(line);
    std::string trimmed = TrimRight(line);
    if (delim == "}" && indent.size() >= 2 && (trimmed.empty() || trimmed.back() != '{')) {
      indent.resize(indent.size() - 2);
    }
    Emit(target_, target_, {line, indent + delim}, id + ":line-after");
  }

  void InsertSemicolon() {
    auto add = [&](int n) {
      std::string trimmed = TrimRight(Line(n));
      if (trimmed.empty() || trimmed.back() == ';') return;
      Emit(n, n, {trimmed + ";"}, "insert-semicolon");
    };
    add(target_);
    if (int prev = PreviousNonBlank(target_); prev > 0) add(prev);
  }

  void DeleteStrayToken() {
    const std::string& line = Line(target_);
    lang::LexResult lexed = lang::Tokenize(line);
    if (auto* failure = std::get_if<lang::LexFailure>(&lexed)) {
      std::string edited = line;
      edited.erase(static_cast<size_t>(failure->col - 1), 1);
      Emit(target_, target_, {edited}, "delete-stray-token");
      return;
    }
    for (const lang::Token& token : std::get<std::vector<lang::Token>>(lexed)) {
      std::string edited = line;
      edited.erase(token.offset, token.lexeme.size());
      if (IsBlank(edited)) {
        Emit(target_, target_, {}, "delete-stray-token");
      } else {
        Emit(target_, target_, {edited}, "delete-stray-token");
      }
    }
  }

  std::set<std::string> Vocabulary() const {
    std::vector<lang::Token> tokens;
    lang::LexResult whole = lang::Tokenize(ctx_.source.text());
    if (auto* all = std::get_if<std::vector<lang::Token>>(&whole)) {
      tokens = *all;
    } else {
      for (const std::string& line : lines_) {
        for (lang::Token& t : LexLine(line)) tokens.push_back(std::move(t));
      }
    }
    std::set<std::string> vocab(lang::KeywordSpellings().begin(),
                                lang::KeywordSpellings().end());
    for (size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].kind != lang::TokenKind::kIdent) continue;
      bool declared =
          (i > 0 && (tokens[i - 1].kind == lang::TokenKind::kLet ||
                     tokens[i - 1].kind == lang::TokenKind::kFn)) ||
          (i + 1 < tokens.size() && tokens[i + 1].kind == lang::TokenKind::kColon);
      if (declared) vocab.insert(tokens[i].lexeme);
    }
    return vocab;
  }

  void RenameToNearest() {
    std::set<std::string> vocab = Vocabulary();
    const std::string& line = Line(target_);
    for (const lang::Token& token : LexLine(line)) {
      if (token.kind != lang::TokenKind::kIdent || vocab.count(token.lexeme) > 0) continue;
      for (const std::string& word : vocab) {
        int distance = EditDistance(token.lexeme, word);
        if (distance < 1 || distance > 2) continue;
        std::string edited = line;
        edited.replace(token.offset, token.lexeme.size(), word);
        Emit(target_, target_, {edited},
             "rename-to-nearest-declared:d" + std::to_string(distance));
      }
    }
  }

  // ---- statement templates --------------------------------------------

  void StatementTemplates() {
    const lang::Ast& ast = ctx_.source.ast();
    signatures_ = lang::Signatures(ast);
    bool guarded = false;
    lang::WalkStatements(ast, signatures_,
                         [&](const lang::FuncDecl& fn, const Stmt& s, const lang::Scope& scope) {
                           if (HeaderLine(s) != target_) return;
                           OnStatement(fn, s, scope);
                           if (!guarded) {
                             InsertGuardReturn(fn, scope);
                             guarded = true;
                           }
                         });
  }

  static int HeaderLine(const Stmt& s) {
    bool compound = s.kind == Stmt::Kind::kIf || s.kind == Stmt::Kind::kWhile;
    return compound ? s.value.span.start_line : s.span.start_line;
  }

  static bool IsCondition(const Stmt& s) {
    return s.kind == Stmt::Kind::kIf || s.kind == Stmt::Kind::kWhile;
  }

  // Latest binding per name, in first-declaration order.
  static std::vector<lang::Binding> Visible(const lang::Scope& scope) {
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

  template <typename F>
  static Expr MutatedCopy(const Expr& root, size_t index, F&& mutate) {
    Expr copy = root;
    Expr* target = nullptr;
    size_t i = 0;
    lang::WalkExpr(copy, [&](Expr& e) {
      if (i++ == index) target = &e;
    });
    mutate(*target);
    return copy;
  }

  void EmitValue(const Stmt& s, const Expr& value, const std::string& id) {
    const lang::SourceSpan& span = s.value.span;
    const std::string& first = Line(span.start_line);
    const std::string& last = Line(span.end_line);
    std::string text = first.substr(0, static_cast<size_t>(span.start_col - 1)) +
                       lang::PrintExpr(value) +
                       last.substr(std::min(last.size(), static_cast<size_t>(span.end_col)));
    Emit(span.start_line, span.end_line, {text}, id);
  }

  void OnStatement(const lang::FuncDecl& fn, const Stmt& s, const lang::Scope& scope) {
    std::vector<const Expr*> nodes;
    lang::WalkExpr(s.value, [&](const Expr& e) { nodes.push_back(&e); });
    std::vector<lang::Binding> visible = Visible(scope);

    for (size_t i = 0; i < nodes.size(); ++i) {
      const Expr& node = *nodes[i];
      if (node.kind == Expr::Kind::kBinary) {
        for (BinaryOp alt : lang::SameClassOperators(node.binary_op)) {
          Expr v = MutatedCopy(s.value, i, [&](Expr& e) { e.binary_op = alt; });
          EmitValue(s, v,
                    "replace-binop:" + std::string(lang::Spelling(node.binary_op)) + "," +
                        std::string(lang::Spelling(alt)));
        }
      }
    }
    for (size_t i = 0; i < nodes.size(); ++i) {
      const Expr& node = *nodes[i];
      if (node.kind != Expr::Kind::kIntLit) continue;
      if (node.int_value < INT64_MAX) {
        EmitValue(s, MutatedCopy(s.value, i, [](Expr& e) { e.int_value += 1; }),
                  "off-by-one-literal:+1");
      }
      if (node.int_value > 0) {
        EmitValue(s, MutatedCopy(s.value, i, [](Expr& e) { e.int_value -= 1; }),
                  "off-by-one-literal:-1");
      }
    }
    for (size_t i = 0; i < nodes.size(); ++i) {
      const Expr& node = *nodes[i];
      if (node.kind != Expr::Kind::kVar) continue;
      auto self = std::find_if(visible.begin(), visible.end(),
                               [&](const lang::Binding& b) { return b.name == node.name; });
      if (self == visible.end()) continue;
      for (const lang::Binding& other : visible) {
        if (other.name == node.name || other.type != self->type) continue;
        EmitValue(s, MutatedCopy(s.value, i, [&](Expr& e) { e.name = other.name; }),
                  "replace-variable");
      }
    }
    if (IsCondition(s)) {
      Expr negated = s.value.kind == Expr::Kind::kUnary &&
                             s.value.unary_op == lang::UnaryOp::kNot
                         ? s.value.operands[0]
                         : Expr::Unary(lang::UnaryOp::kNot, s.value);
      EmitValue(s, negated, "negate-condition");
    }
    for (size_t i = 0; i < nodes.size(); ++i) {
      const Expr& node = *nodes[i];
      if (node.kind != Expr::Kind::kCall) continue;
      for (size_t a = 0; a < node.operands.size(); ++a) {
        for (size_t b = a + 1; b < node.operands.size(); ++b) {
          EmitValue(s, MutatedCopy(s.value, i, [&](Expr& e) {
                      std::swap(e.operands[a], e.operands[b]);
                    }),
                    "swap-call-args");
        }
      }
    }
    if (IsCondition(s)) {
      for (const Expr& clause : Clauses(fn, s, visible)) {
        EmitValue(s, Expr::Binary(BinaryOp::kOr, s.value, clause), "widen-condition");
        EmitValue(s, Expr::Binary(BinaryOp::kAnd, s.value, clause), "narrow-condition");
      }
    }
    DeleteStatement(s);
  }

  static void Flatten(const Expr& e, std::vector<const Expr*>& out) {
    out.push_back(&e);
    if (e.kind == Expr::Kind::kBinary &&
        (e.binary_op == BinaryOp::kAnd || e.binary_op == BinaryOp::kOr)) {
      Flatten(e.operands[0], out);
      Flatten(e.operands[1], out);
    }
  }

  static void CollectConditions(const std::vector<Stmt>& body, const Stmt* skip,
                                std::vector<const Expr*>& out) {
    for (const Stmt& s : body) {
      if (IsCondition(s)) {
        if (&s != skip) Flatten(s.value, out);
        CollectConditions(s.body, skip, out);
        CollectConditions(s.else_body, skip, out);
      }
    }
  }

  // Boolean clauses from other conditions in the same function whose
  // variables are all visible here.
  std::vector<Expr> Clauses(const lang::FuncDecl& fn, const Stmt& s,
                            const std::vector<lang::Binding>& visible) const {
    std::vector<const Expr*> raw;
    CollectConditions(fn.body, &s, raw);
    std::vector<const Expr*> own;
    Flatten(s.value, own);
    std::set<std::string> seen;
    for (const Expr* e : own) seen.insert(lang::Dump(*e));
    std::vector<Expr> clauses;
    for (const Expr* e : raw) {
      std::string key = lang::Dump(*e);
      if (!seen.insert(key).second) continue;
      bool ok = true;
      lang::WalkExpr(*e, [&](const Expr& n) {
        if (n.kind != Expr::Kind::kVar) return;
        ok = ok && std::any_of(visible.begin(), visible.end(),
                               [&](const lang::Binding& b) { return b.name == n.name; });
      });
      if (ok) clauses.push_back(*e);
    }
    return clauses;
  }

  void DeleteStatement(const Stmt& s) {
    const lang::SourceSpan& span = s.span;
    const std::string& first = Line(span.start_line);
    const std::string& last = Line(span.end_line);
    std::string prefix = first.substr(0, static_cast<size_t>(span.start_col - 1));
    std::string suffix = last.substr(std::min(last.size(), static_cast<size_t>(span.end_col)));
    if (IsBlank(prefix) && IsBlank(suffix)) {
      Emit(span.start_line, span.end_line, {}, "delete-statement");
    } else {
      Emit(span.start_line, span.end_line, {TrimRight(prefix + suffix)}, "delete-statement");
    }
  }

  void InsertGuardReturn(const lang::FuncDecl& fn, const lang::Scope& scope) {
    std::string indent = IndentOf(Line(target_));
    std::string fallback = fn.return_type == lang::Type::kInt ? "0" : "false";
    for (const lang::Binding& b : Visible(scope)) {
      if (b.type != lang::Type::kInt) continue;
      for (const char* op : {"==", "<", "<="}) {
        Emit(target_, target_,
             {indent + "if (" + b.name + " " + op + " 0) {",
              indent + "  return " + fallback + ";", indent + "}", Line(target_)},
             "insert-guard-return");
      }
    }
  }

  const RepairContext& ctx_;
  const std::vector<std::string>& lines_;
  int target_;
  lang::SignatureTable signatures_;
  std::vector<CandidatePatch> out_;
};

}  // namespace

std::vector<CandidatePatch> EnumerateCandidates(const RepairContext& ctx) {
  return Generator(ctx).Run();
}

}  // namespace iterfix::gen

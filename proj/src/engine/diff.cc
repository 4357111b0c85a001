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

#include "engine/diff.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "common/errors.h"

namespace iterfix::engine {
namespace {

constexpr int kContext = 3;

struct Edit {
  char op;  // ' ', '-', '+'
  std::string text;
};

std::vector<Edit> Script(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  const size_t n = a.size(), m = b.size();
  std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
  for (size_t i = n; i-- > 0;) {
    for (size_t j = m; j-- > 0;) {
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1
                               : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }
  std::vector<Edit> script;
  size_t i = 0, j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && a[i] == b[j]) {
      script.push_back({' ', a[i++]});
      ++j;
    } else if (j < m && (i == n || lcs[i][j + 1] > lcs[i + 1][j])) {
      script.push_back({'+', b[j++]});
    } else {
      script.push_back({'-', a[i++]});
    }
  }
  return script;
}

std::string Range(int start, int count) {
  if (count == 0) return std::to_string(start - 1) + ",0";
  if (count == 1) return std::to_string(start);
  return std::to_string(start) + "," + std::to_string(count);
}

}  // namespace

std::string UnifiedDiff(const std::vector<std::string>& before,
                        const std::vector<std::string>& after, std::string_view name) {
  std::vector<Edit> script = Script(before, after);
  std::vector<size_t> changes;
  for (size_t i = 0; i < script.size(); ++i) {
    if (script[i].op != ' ') changes.push_back(i);
  }
  if (changes.empty()) return "";

  std::ostringstream out;
  out << "--- a/" << name << "\n+++ b/" << name << "\n";
  size_t c = 0;
  while (c < changes.size()) {
    size_t first = changes[c] >= kContext ? changes[c] - kContext : 0;
    size_t last = changes[c];
    while (c + 1 < changes.size() && changes[c + 1] <= last + 2 * kContext + 1) {
      last = changes[++c];
    }
    ++c;
    last = std::min(script.size() - 1, last + kContext);

    int a_start = 1, b_start = 1;
    for (size_t i = 0; i < first; ++i) {
      if (script[i].op != '+') ++a_start;
      if (script[i].op != '-') ++b_start;
    }
    int a_count = 0, b_count = 0;
    for (size_t i = first; i <= last; ++i) {
      if (script[i].op != '+') ++a_count;
      if (script[i].op != '-') ++b_count;
    }
    out << "@@ -" << Range(a_start, a_count) << " +" << Range(b_start, b_count) << " @@\n";
    for (size_t i = first; i <= last; ++i) out << script[i].op << script[i].text << "\n";
  }
  return out.str();
}

std::vector<std::string> ApplyUnifiedDiff(const std::vector<std::string>& before,
                                          std::string_view diff) {
  std::vector<std::string> after;
  size_t cursor = 0;  // next unconsumed line of `before`
  std::istringstream in{std::string(diff)};
  std::string line;
  bool in_hunk = false;
  while (std::getline(in, line)) {
    if (line.rfind("--- ", 0) == 0 || line.rfind("+++ ", 0) == 0) {
      if (!in_hunk) continue;
    }
    if (line.rfind("@@ -", 0) == 0) {
      int start = 0;
      size_t pos = 4;
      while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
        start = start * 10 + (line[pos++] - '0');
      }
      bool empty_range = line.compare(pos, 2, ",0") == 0;
      size_t target = empty_range ? static_cast<size_t>(start) : static_cast<size_t>(start - 1);
      if (target < cursor || target > before.size()) throw InputError("diff hunk out of order");
      while (cursor < target) after.push_back(before[cursor++]);
      in_hunk = true;
      continue;
    }
    if (!in_hunk || line.empty()) throw InputError("malformed diff line");
    std::string text = line.substr(1);
    switch (line[0]) {
      case ' ':
      case '-':
        if (cursor >= before.size() || before[cursor] != text) {
          throw InputError("diff does not apply at line " + std::to_string(cursor + 1));
        }
        ++cursor;
        if (line[0] == ' ') after.push_back(text);
        break;
      case '+':
        after.push_back(text);
        break;
      default:
        throw InputError("malformed diff line");
    }
  }
  while (cursor < before.size()) after.push_back(before[cursor++]);
  return after;
}

}  // namespace iterfix::engine

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

#include <set>

#include "common/errors.h"
#include "exec/runner.h"
#include "json.hpp"

namespace iterfix::exec {
namespace {

using nlohmann::json;

Value ToValue(const json& j, const std::string& where) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<int64_t>();
  throw InputError(where + ": values must be integers or booleans");
}

json FromValue(const Value& v) {
  if (const auto* b = std::get_if<bool>(&v)) return *b;
  return std::get<int64_t>(v);
}

}  // namespace

TestSuite ParseSuite(std::string_view json_text) {
  json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("tests") ||
      !doc["tests"].is_array()) {
    throw InputError("test suite must be an object with a \"tests\" array");
  }
  TestSuite suite;
  std::set<std::string> names;
  for (const json& t : doc["tests"]) {
    if (!t.is_object() || !t.contains("name") || !t["name"].is_string() ||
        !t.contains("entry") || !t["entry"].is_string() || !t.contains("expect")) {
      throw InputError("each test needs string \"name\", \"entry\" and an \"expect\"");
    }
    TestCase test;
    test.name = t["name"].get<std::string>();
    if (!names.insert(test.name).second) {
      throw InputError("duplicate test name '" + test.name + "'");
    }
    test.entry = t["entry"].get<std::string>();
    if (t.contains("args")) {
      if (!t["args"].is_array()) throw InputError(test.name + ": args must be an array");
      for (const json& a : t["args"]) test.args.push_back(ToValue(a, test.name));
    }
    const json& expect = t["expect"];
    if (expect.is_object()) {
      if (!expect.value("runtime_error", false)) {
        throw InputError(test.name + ": object expect must be {\"runtime_error\":true}");
      }
    } else {
      test.expect = ToValue(expect, test.name);
    }
    suite.tests.push_back(std::move(test));
  }
  return suite;
}

std::string SuiteToJson(const TestSuite& suite) {
  json tests = json::array();
  for (const TestCase& t : suite.tests) {
    json args = json::array();
    for (const Value& v : t.args) args.push_back(FromValue(v));
    json entry = {{"name", t.name}, {"entry", t.entry}, {"args", args}};
    entry["expect"] = t.expect ? FromValue(*t.expect) : json{{"runtime_error", true}};
    tests.push_back(std::move(entry));
  }
  return json{{"tests", tests}}.dump();
}

}  // namespace iterfix::exec

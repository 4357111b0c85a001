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

#include <map>
#include <thread>
#include <utility>

#include "common/errors.h"
#include "exec/runner.h"

namespace iterfix::exec {

using lang::BinaryOp;
using lang::Expr;
using lang::Stmt;

std::string ToString(const Value& value) {
  if (const auto* b = std::get_if<bool>(&value)) return *b ? "true" : "false";
  return std::to_string(std::get<int64_t>(value));
}

std::string_view StatusName(TestStatus status) {
  switch (status) {
    case TestStatus::kPass: return "pass";
    case TestStatus::kFail: return "fail";
    case TestStatus::kRuntimeError: return "runtime-error";
    case TestStatus::kTimeout: return "timeout";
  }
  return "unknown";
}

namespace {

constexpr int kMaxCallDepth = 200;

struct RuntimeError {
  std::string message;
};

struct Timeout {};

int64_t Wrap(uint64_t v) { return static_cast<int64_t>(v); }

class Interpreter {
 public:
  Interpreter(const lang::Ast& ast, int64_t budget, std::set<int>& coverage)
      : budget_(budget), coverage_(coverage) {
    for (const lang::FuncDecl& fn : ast.functions) functions_.emplace(fn.name, &fn);
  }

  Value Call(const std::string& name, const std::vector<Value>& args) {
    auto it = functions_.find(name);
    if (it == functions_.end()) throw RuntimeError{"no function '" + name + "'"};
    const lang::FuncDecl& fn = *it->second;
    if (fn.params.size() != args.size()) {
      throw RuntimeError{"'" + name + "' called with " + std::to_string(args.size()) +
                         " arguments, expects " + std::to_string(fn.params.size())};
    }
    if (++call_depth_ > kMaxCallDepth) throw RuntimeError{"call depth exceeded"};
    Step();
    Frame frame;
    for (size_t i = 0; i < args.size(); ++i) {
      bool is_bool = std::holds_alternative<bool>(args[i]);
      if (is_bool != (fn.params[i].type == lang::Type::kBool)) {
        throw RuntimeError{"argument " + std::to_string(i + 1) + " of '" + name +
                           "' has the wrong type"};
      }
      frame.emplace_back(fn.params[i].name, args[i]);
    }
    std::swap(frame, frame_);
    std::optional<Value> result = ExecBlock(fn.body);
    std::swap(frame, frame_);
    --call_depth_;
    if (!result) throw RuntimeError{"function '" + name + "' ended without return"};
    return *result;
  }

 private:
  using Frame = std::vector<std::pair<std::string, Value>>;

  void Step() {
    if (++steps_ > budget_) throw Timeout{};
  }

  Value* Find(const std::string& name) {
    for (auto it = frame_.rbegin(); it != frame_.rend(); ++it) {
      if (it->first == name) return &it->second;
    }
    return nullptr;
  }

  std::optional<Value> ExecBlock(const std::vector<Stmt>& body) {
    size_t mark = frame_.size();
    std::optional<Value> result;
    for (const Stmt& s : body) {
      result = Exec(s);
      if (result) break;
    }
    frame_.resize(mark);
    return result;
  }

  std::optional<Value> Exec(const Stmt& s) {
    Step();
    switch (s.kind) {
      case Stmt::Kind::kLet: {
        coverage_.insert(s.span.start_line);
        Value v = Eval(s.value);
        frame_.emplace_back(s.name, v);
        return std::nullopt;
      }
      case Stmt::Kind::kAssign: {
        coverage_.insert(s.span.start_line);
        Value v = Eval(s.value);
        Value* slot = Find(s.name);
        if (slot == nullptr) throw RuntimeError{"undefined variable '" + s.name + "'"};
        *slot = v;
        return std::nullopt;
      }
      case Stmt::Kind::kReturn:
        coverage_.insert(s.span.start_line);
        return Eval(s.value);
      case Stmt::Kind::kIf:
        if (Condition(s.value)) return ExecBlock(s.body);
        if (s.has_else) return ExecBlock(s.else_body);
        return std::nullopt;
      case Stmt::Kind::kWhile:
        while (Condition(s.value)) {
          if (std::optional<Value> result = ExecBlock(s.body)) return result;
          Step();
        }
        return std::nullopt;
    }
    return std::nullopt;
  }

  bool Condition(const Expr& e) {
    coverage_.insert(e.span.start_line);
    return AsBool(Eval(e));
  }

  static int64_t AsInt(const Value& v) {
    if (const auto* i = std::get_if<int64_t>(&v)) return *i;
    throw RuntimeError{"expected int value"};
  }

  static bool AsBool(const Value& v) {
    if (const auto* b = std::get_if<bool>(&v)) return *b;
    throw RuntimeError{"expected bool value"};
  }

  Value Eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::kIntLit: return e.int_value;
      case Expr::Kind::kBoolLit: return e.bool_value;
      case Expr::Kind::kVar: {
        Value* v = Find(e.name);
        if (v == nullptr) throw RuntimeError{"undefined variable '" + e.name + "'"};
        return *v;
      }
      case Expr::Kind::kCall: {
        std::vector<Value> args;
        args.reserve(e.operands.size());
        for (const Expr& arg : e.operands) args.push_back(Eval(arg));
        return Call(e.name, args);
      }
      case Expr::Kind::kUnary: {
        Value v = Eval(e.operands[0]);
        if (e.unary_op == lang::UnaryOp::kNot) return !AsBool(v);
        return Wrap(0 - static_cast<uint64_t>(AsInt(v)));
      }
      case Expr::Kind::kBinary:
        return Binary(e);
    }
    throw RuntimeError{"bad expression"};
  }

  Value Binary(const Expr& e) {
    BinaryOp op = e.binary_op;
    if (op == BinaryOp::kAnd || op == BinaryOp::kOr) {
      bool lhs = AsBool(Eval(e.operands[0]));
      if (op == BinaryOp::kAnd && !lhs) return false;
      if (op == BinaryOp::kOr && lhs) return true;
      return AsBool(Eval(e.operands[1]));
    }
    Value lhs = Eval(e.operands[0]);
    Value rhs = Eval(e.operands[1]);
    if (op == BinaryOp::kEq) return lhs == rhs;
    if (op == BinaryOp::kNe) return lhs != rhs;
    int64_t a = AsInt(lhs);
    int64_t b = AsInt(rhs);
    auto ua = static_cast<uint64_t>(a);
    auto ub = static_cast<uint64_t>(b);
    switch (op) {
      case BinaryOp::kAdd: return Wrap(ua + ub);
      case BinaryOp::kSub: return Wrap(ua - ub);
      case BinaryOp::kMul: return Wrap(ua * ub);
      case BinaryOp::kDiv:
        if (b == 0) throw RuntimeError{"division by zero"};
        if (b == -1) return Wrap(0 - ua);
        return a / b;
      case BinaryOp::kMod:
        if (b == 0) throw RuntimeError{"modulo by zero"};
        if (b == -1) return int64_t{0};
        return a % b;
      case BinaryOp::kLt: return a < b;
      case BinaryOp::kLe: return a <= b;
      case BinaryOp::kGt: return a > b;
      case BinaryOp::kGe: return a >= b;
      default: break;
    }
    throw RuntimeError{"bad operator"};
  }

  std::map<std::string, const lang::FuncDecl*> functions_;
  int64_t budget_;
  int64_t steps_ = 0;
  int call_depth_ = 0;
  Frame frame_;
  std::set<int>& coverage_;
};

}  // namespace

TestResult RunTest(const lang::SourceProgram& program, const TestCase& test,
                   int64_t step_budget) {
  if (!program.parsed()) throw ContractError("RunTest: program does not parse");
  TestResult result;
  result.name = test.name;
  Interpreter interpreter(program.ast(), step_budget, result.coverage);
  try {
    Value got = interpreter.Call(test.entry, test.args);
    if (!test.expect) {
      result.outcome = {TestStatus::kFail, "expected runtime error got " + ToString(got)};
    } else if (got == *test.expect) {
      result.outcome = {TestStatus::kPass, ""};
    } else {
      result.outcome = {TestStatus::kFail,
                        "expected " + ToString(*test.expect) + " got " + ToString(got)};
    }
  } catch (const RuntimeError& error) {
    if (!test.expect) {
      result.outcome = {TestStatus::kPass, ""};
    } else {
      result.outcome = {TestStatus::kRuntimeError, "runtime error: " + error.message};
    }
  } catch (const Timeout&) {
    result.outcome = {TestStatus::kTimeout,
                      "timeout after " + std::to_string(step_budget) + " steps"};
  }
  return result;
}

TestReport RunSuite(const lang::SourceProgram& program, const TestSuite& suite,
                    int64_t step_budget, int threads) {
  TestReport report;
  report.results.resize(suite.tests.size());
  size_t workers = threads > 1 ? std::min<size_t>(static_cast<size_t>(threads),
                                                  suite.tests.size())
                               : 1;
  if (workers <= 1) {
    for (size_t i = 0; i < suite.tests.size(); ++i) {
      report.results[i] = RunTest(program, suite.tests[i], step_budget);
    }
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (size_t i = w; i < suite.tests.size(); i += workers) {
          report.results[i] = RunTest(program, suite.tests[i], step_budget);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }
  for (const TestResult& r : report.results) {
    if (r.outcome.status != TestStatus::kPass) ++report.failing;
  }
  return report;
}

}  // namespace iterfix::exec

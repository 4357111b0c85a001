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

#include "perturb/corpus.h"

#include <algorithm>
#include <filesystem>
#include <set>
#include <tuple>

#include "common/errors.h"
#include "common/io.h"
#include "json.hpp"
#include "lang/printer.h"
#include "perturb/perturb.h"

namespace iterfix::perturb {
namespace {

using nlohmann::json;

constexpr int kMultiAttemptsPerSample = 100;

uint64_t ProgramSeed(uint64_t seed, size_t index) {
  return seed + 0x9E3779B97F4A7C15ULL * (static_cast<uint64_t>(index) + 1);
}

struct Kept {
  std::tuple<size_t, size_t, size_t> order;
  CorpusSample sample;
};

void RequireCorrect(const SeedProgram& seed, int64_t budget) {
  exec::Validation v = exec::Validate(seed.program, *seed.suite, budget);
  if (v.kind == exec::StateKind::kCompileError) {
    throw InputError("seed program '" + seed.name + "' does not check: " + v.diagnostic);
  }
  if (v.kind != exec::StateKind::kPlausible) {
    throw InputError("seed program '" + seed.name + "' fails its own suite: " +
                     v.diagnostic);
  }
}

CorpusSample MakeSample(const SeedProgram& seed, std::string id, std::string op,
                        std::string buggy, std::vector<int> site_lines,
                        const exec::Validation& v) {
  CorpusSample s;
  s.id = std::move(id);
  s.program = seed.name;
  s.buggy = lang::SourceProgram(std::move(buggy));
  s.fixed = seed.program;
  s.op = std::move(op);
  std::sort(site_lines.begin(), site_lines.end());
  s.site_line = site_lines.front();
  s.site_lines = std::move(site_lines);
  s.diag_kind = v.kind;
  s.diagnostic = v.diagnostic;
  s.suite = seed.suite;
  return s;
}

void SingleLocation(const SeedProgram& seed, size_t index, const CorpusOptions& options,
                    std::vector<Kept>& kept, CorpusStats& stats) {
  struct Pending {
    size_t op_index;
    size_t site_index;
    Mutant mutant;
  };
  std::vector<Pending> pending;
  const std::vector<PerturbOp>& ops = AllOps();
  for (size_t o = 0; o < ops.size(); ++o) {
    std::vector<Mutant> mutants = PerturbSites(seed.program, ops[o]);
    for (size_t i = 0; i < mutants.size(); ++i) {
      pending.push_back(Pending{o, i, std::move(mutants[i])});
    }
  }
  // Stratified by op: each op's sites are shuffled, then ops take turns so
  // ops with many sites do not crowd out the rest.
  std::vector<std::vector<size_t>> by_op(ops.size());
  for (size_t i = 0; i < pending.size(); ++i) by_op[pending[i].op_index].push_back(i);
  for (size_t o = 0; o < ops.size(); ++o) {
    DeterministicShuffle(by_op[o], ProgramSeed(options.seed, index) + o);
  }
  std::vector<size_t> cursor(ops.size(), 0);

  std::set<std::string> seen;
  int taken = 0;
  bool progressed = true;
  while (taken < options.per_program && progressed) {
    progressed = false;
    for (size_t o = 0; o < ops.size() && taken < options.per_program; ++o) {
      if (cursor[o] >= by_op[o].size()) continue;
      progressed = true;
      const Pending& p = pending[by_op[o][cursor[o]++]];
      if (!seen.insert(p.mutant.text).second) continue;
      ++stats.generated;
      lang::SourceProgram buggy(p.mutant.text);
      exec::Validation v = exec::Validate(buggy, *seed.suite, options.step_budget);
      if (v.kind == exec::StateKind::kPlausible) continue;
      std::string op(OpName(ops[p.op_index]));
      std::string id = seed.name + "/" + op + "/" + std::to_string(p.site_index);
      kept.push_back(Kept{{index, p.op_index, p.site_index},
                          MakeSample(seed, std::move(id), op, p.mutant.text,
                                     {p.mutant.site_line}, v)});
      ++taken;
    }
  }
}

void TwoLocations(const SeedProgram& seed, size_t index, const CorpusOptions& options,
                  std::vector<Kept>& kept, CorpusStats& stats) {
  const lang::Ast& ast = seed.program.ast();
  struct Site {
    size_t op_index;
    AstMutation mutation;
  };
  std::vector<Site> sites;
  const std::vector<PerturbOp>& ops = AllOps();
  for (size_t o = 0; o < ops.size(); ++o) {
    for (AstMutation& m : ExprMutations(ast, ops[o])) sites.push_back(Site{o, std::move(m)});
  }
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t a = 0; a < sites.size(); ++a) {
    for (size_t b = a + 1; b < sites.size(); ++b) {
      if (sites[a].mutation.line != sites[b].mutation.line) pairs.emplace_back(a, b);
    }
  }
  DeterministicShuffle(pairs, ProgramSeed(options.seed, index));

  std::set<std::string> seen;
  int taken = 0;
  int attempts = 0;
  int max_attempts = kMultiAttemptsPerSample * options.per_program;
  for (const auto& [a, b] : pairs) {
    if (taken >= options.per_program || attempts >= max_attempts) break;
    const AstMutation& ma = sites[a].mutation;
    const AstMutation& mb = sites[b].mutation;
    std::string text = lang::Print(ApplyMutations(ast, {&ma, &mb}));
    if (!seen.insert(text).second) continue;
    ++attempts;
    ++stats.generated;
    exec::Validation both = exec::Validate(lang::SourceProgram(text), *seed.suite,
                                           options.step_budget);
    if (both.kind != exec::StateKind::kFunctionalError) continue;
    int failing = *both.failing();
    bool informative = true;
    for (const AstMutation* single : {&ma, &mb}) {
      exec::Validation v = exec::Validate(
          lang::SourceProgram(lang::Print(ApplyMutations(ast, {single}))), *seed.suite,
          options.step_budget);
      // Reverting the other edit must lower the failing count.
      if (!v.failing() || *v.failing() >= failing) informative = false;
    }
    if (!informative) continue;
    std::string op = std::string(OpName(ops[sites[a].op_index])) + "+" +
                     std::string(OpName(ops[sites[b].op_index]));
    std::string id = seed.name + "/" + std::string(OpName(ops[sites[a].op_index])) + "@" +
                     std::to_string(a) + "+" + std::string(OpName(ops[sites[b].op_index])) +
                     "@" + std::to_string(b);
    kept.push_back(Kept{{index, a, b},
                        MakeSample(seed, std::move(id), std::move(op), std::move(text),
                                   {ma.line, mb.line}, both)});
    ++taken;
  }
}

}  // namespace

std::vector<CorpusSample> BuildCorpus(const std::vector<SeedProgram>& seeds,
                                      const CorpusOptions& options, CorpusStats* stats) {
  if (options.per_program < 1) throw InputError("per_program must be positive");
  if (options.locations != 1 && options.locations != 2) {
    throw InputError("locations must be 1 or 2");
  }
  CorpusStats local;
  std::vector<Kept> kept;
  for (size_t i = 0; i < seeds.size(); ++i) {
    RequireCorrect(seeds[i], options.step_budget);
    if (options.locations == 1) {
      SingleLocation(seeds[i], i, options, kept, local);
    } else {
      TwoLocations(seeds[i], i, options, kept, local);
    }
  }
  std::stable_sort(kept.begin(), kept.end(),
                   [](const Kept& a, const Kept& b) { return a.order < b.order; });
  std::vector<CorpusSample> out;
  for (Kept& k : kept) out.push_back(std::move(k.sample));
  local.kept = static_cast<int>(out.size());
  if (stats != nullptr) *stats = local;
  return out;
}

int RepairLine(const CorpusSample& sample) {
  if (sample.diag_kind == exec::StateKind::kCompileError) {
    std::vector<check::CompileDiagnostic> diags = check::Check(sample.buggy);
    if (!diags.empty()) return check::FirstCeLocation(diags, sample.buggy.line_count());
  }
  return std::clamp(sample.site_line, 1, sample.buggy.line_count());
}

std::string ToJsonLine(const CorpusSample& s) {
  json doc = {
      {"id", s.id},
      {"program", s.program},
      {"op", s.op},
      {"site_line", s.site_line},
      {"site_lines", s.site_lines},
      {"diag_kind", std::string(exec::KindLabel(s.diag_kind))},
      {"diagnostic", s.diagnostic},
      {"buggy", s.buggy.text()},
      {"fixed", s.fixed.text()},
      {"tests", json::parse(exec::SuiteToJson(*s.suite))},
  };
  return doc.dump();
}

CorpusSample FromJsonLine(std::string_view line) {
  json doc = json::parse(line, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) throw InputError("corpus line is not JSON");
  try {
    CorpusSample s;
    s.id = doc.at("id").get<std::string>();
    s.program = doc.value("program", "");
    s.op = doc.at("op").get<std::string>();
    s.site_line = doc.at("site_line").get<int>();
    s.site_lines = doc.value("site_lines", std::vector<int>{s.site_line});
    std::string kind = doc.at("diag_kind").get<std::string>();
    if (kind == "CE") {
      s.diag_kind = exec::StateKind::kCompileError;
    } else if (kind == "FE") {
      s.diag_kind = exec::StateKind::kFunctionalError;
    } else {
      throw InputError("diag_kind must be CE or FE");
    }
    s.diagnostic = doc.at("diagnostic").get<std::string>();
    s.buggy = lang::SourceProgram(doc.at("buggy").get<std::string>());
    s.fixed = lang::SourceProgram(doc.at("fixed").get<std::string>());
    s.suite = std::make_shared<const exec::TestSuite>(exec::ParseSuite(doc.at("tests").dump()));
    return s;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad corpus sample: ") + e.what());
  }
}

std::string ToJsonLines(const std::vector<CorpusSample>& samples) {
  std::string out;
  for (const CorpusSample& s : samples) {
    out += ToJsonLine(s);
    out += '\n';
  }
  return out;
}

std::vector<CorpusSample> FromJsonLines(std::string_view text) {
  std::vector<CorpusSample> out;
  for (const std::string& line : lang::SplitLines(text)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(FromJsonLine(line));
  }
  return out;
}

std::vector<SeedProgram> LoadSeedDirectory(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw InputError("not a directory: '" + dir + "'");
  std::vector<std::string> names;
  for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".mini") names.push_back(entry.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  std::vector<SeedProgram> seeds;
  for (const std::string& name : names) {
    fs::path base = fs::path(dir) / name;
    std::string suite_path = base.string() + ".json";
    if (!fs::exists(suite_path)) throw InputError("missing test suite '" + suite_path + "'");
    SeedProgram seed;
    seed.name = name;
    seed.program = lang::SourceProgram(ReadSourceFile(base.string() + ".mini"));
    seed.suite = std::make_shared<const exec::TestSuite>(exec::ParseSuite(ReadFile(suite_path)));
    seeds.push_back(std::move(seed));
  }
  if (seeds.empty()) throw InputError("no .mini programs in '" + dir + "'");
  return seeds;
}

}  // namespace iterfix::perturb

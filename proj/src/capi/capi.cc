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

#include "iterfix/iterfix.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <string>

#include "common/errors.h"
#include "common/io.h"
#include "engine/engine.h"
#include "engine/report.h"
#include "engine/trace.h"
#include "exec/runner.h"
#include "faultloc/ochiai.h"
#include "gen/training.h"
#include "json.hpp"
#include "perturb/corpus.h"

#ifndef ITERFIX_VERSION
#define ITERFIX_VERSION "0.0.0"
#endif

struct iterfix_corpus {
  std::vector<iterfix::perturb::CorpusSample> samples;
};
struct iterfix_model {
  iterfix::gen::GeneratorModel model;
};
struct iterfix_trace {
  iterfix::engine::RepairTrace trace;
};
struct iterfix_report {
  iterfix::engine::Report report;
};

namespace {

thread_local std::string last_error;

template <typename Fn>
iterfix_status Guard(Fn&& fn) {
  last_error.clear();
  try {
    return fn();
  } catch (const iterfix::InputError& e) {
    last_error = e.what();
    return ITERFIX_INVALID_INPUT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ITERFIX_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return ITERFIX_INTERNAL;
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Require(const void* p, const char* what) {
  if (p == nullptr) throw iterfix::InputError(std::string(what) + " is null");
}

const iterfix::perturb::CorpusSample& Sample(const iterfix_corpus* corpus, size_t index) {
  Require(corpus, "corpus");
  if (index >= corpus->samples.size()) throw iterfix::InputError("sample index out of range");
  return corpus->samples[index];
}

}  // namespace

extern "C" {

const char* iterfix_version(void) { return ITERFIX_VERSION; }

const char* iterfix_format_version(void) { return iterfix::engine::kTraceFormat.data(); }

const char* iterfix_last_error(void) { return last_error.c_str(); }

void iterfix_string_free(char* s) { std::free(s); }

iterfix_status iterfix_digest(const char* data, size_t size, char** out) {
  return Guard([&] {
    Require(out, "out");
    if (size > 0) Require(data, "data");
    *out = Dup(iterfix::Digest(std::string_view(data == nullptr ? "" : data, size)));
    return ITERFIX_OK;
  });
}

iterfix_status iterfix_corpus_generate(const char* programs_dir, int per_program, uint64_t seed,
                                       int locations, int64_t step_budget,
                                       iterfix_corpus** out) {
  return Guard([&] {
    Require(programs_dir, "programs_dir");
    Require(out, "out");
    iterfix::perturb::CorpusOptions options;
    options.per_program = per_program;
    options.seed = seed;
    options.locations = locations;
    options.step_budget = step_budget;
    auto seeds = iterfix::perturb::LoadSeedDirectory(programs_dir);
    auto corpus = std::make_unique<iterfix_corpus>();
    corpus->samples = iterfix::perturb::BuildCorpus(seeds, options);
    *out = corpus.release();
    return ITERFIX_OK;
  });
}

iterfix_status iterfix_corpus_parse(const char* jsonl, iterfix_corpus** out) {
  return Guard([&] {
    Require(jsonl, "jsonl");
    Require(out, "out");
    auto corpus = std::make_unique<iterfix_corpus>();
    corpus->samples = iterfix::perturb::FromJsonLines(jsonl);
    *out = corpus.release();
    return ITERFIX_OK;
  });
}

iterfix_status iterfix_corpus_to_jsonl(const iterfix_corpus* corpus, char** out) {
  return Guard([&] {
    Require(corpus, "corpus");
    Require(out, "out");
    *out = Dup(iterfix::perturb::ToJsonLines(corpus->samples));
    return ITERFIX_OK;
  });
}

size_t iterfix_corpus_size(const iterfix_corpus* corpus) {
  return corpus == nullptr ? 0 : corpus->samples.size();
}

iterfix_status iterfix_corpus_sample_id(const iterfix_corpus* corpus, size_t index, char** out) {
  return Guard([&] {
    Require(out, "out");
    *out = Dup(Sample(corpus, index).id);
    return ITERFIX_OK;
  });
}

iterfix_status iterfix_corpus_sample_buggy(const iterfix_corpus* corpus, size_t index,
                                           char** out) {
  return Guard([&] {
    Require(out, "out");
    *out = Dup(Sample(corpus, index).buggy.text());
    return ITERFIX_OK;
  });
}

iterfix_status iterfix_corpus_sample_suite(const iterfix_corpus* corpus, size_t index,
                                           char** out) {
  return Guard([&] {
    Require(out, "out");
    *out = Dup(iterfix::exec::SuiteToJson(*Sample(corpus, index).suite));
    return ITERFIX_OK;
  });
}

void iterfix_corpus_free(iterfix_corpus* corpus) { delete corpus; }

void iterfix_train_options_default(iterfix_train_options* options) {
  if (options == nullptr) return;
  iterfix::gen::TrainOptions defaults;
  options->k = defaults.k;
  options->max_iter = defaults.max_iter;
  options->seed = defaults.seed;
  options->step_budget = defaults.step_budget;
}

iterfix_status iterfix_train(const iterfix_corpus* initial, const iterfix_train_options* options,
                             iterfix_model** model, iterfix_corpus** augmented,
                             char** growth_table) {
  return Guard([&] {
    Require(initial, "corpus");
    Require(options, "options");
    Require(model, "model");
    iterfix::gen::TrainOptions o;
    o.k = options->k;
    o.max_iter = options->max_iter;
    o.seed = options->seed;
    o.step_budget = options->step_budget;
    iterfix::gen::TrainResult result = iterfix::gen::IterativeTrain(initial->samples, o);
    auto m = std::make_unique<iterfix_model>();
    m->model = std::move(result.model);
    std::unique_ptr<iterfix_corpus> s;
    if (augmented != nullptr) {
      s = std::make_unique<iterfix_corpus>();
      s->samples = std::move(result.augmented);
    }
    char* table = growth_table != nullptr ? Dup(iterfix::gen::GrowthTable(result.growth)) : nullptr;
    *model = m.release();
    if (augmented != nullptr) *augmented = s.release();
    if (growth_table != nullptr) *growth_table = table;
    return ITERFIX_OK;
  });
}

iterfix_status iterfix_model_parse(const char* json, iterfix_model** out) {
  return Guard([&] {
    Require(json, "json");
    Require(out, "out");
    auto m = std::make_unique<iterfix_model>();
    m->model = iterfix::gen::GeneratorModel::FromJson(json);
    *out = m.release();
    return ITERFIX_OK;
  });
}

iterfix_status iterfix_model_to_json(const iterfix_model* model, char** out) {
  return Guard([&] {
    Require(model, "model");
    Require(out, "out");
    *out = Dup(model->model.ToJson());
    return ITERFIX_OK;
  });
}

void iterfix_model_free(iterfix_model* model) { delete model; }

iterfix_status iterfix_localize(const char* program, const char* suite_json, int top_n,
                                int64_t step_budget, char** out) {
  return Guard([&] {
    Require(program, "program");
    Require(suite_json, "suite_json");
    Require(out, "out");
    if (top_n < 1) throw iterfix::InputError("top must be at least 1");
    iterfix::lang::SourceProgram source{std::string(program)};
    iterfix::exec::TestSuite suite = iterfix::exec::ParseSuite(suite_json);
    iterfix::exec::Validation v = iterfix::exec::Validate(source, suite, step_budget);
    if (v.kind == iterfix::exec::StateKind::kCompileError) {
      throw iterfix::InputError("program does not compile: " + v.diagnostic);
    }
    nlohmann::json result{{"failing", v.report->failing},
                          {"total", v.report->results.size()},
                          {"locations", nlohmann::json::array()}};
    iterfix_status status = ITERFIX_NO_RESULT;
    if (v.report->failing > 0) {
      status = ITERFIX_OK;
      for (const auto& loc : iterfix::faultloc::Rank(
               *v.report, iterfix::lang::ExecutableLines(source.ast()), top_n)) {
        result["locations"].push_back(
            {{"line", loc.line}, {"score", loc.score}, {"rank", loc.rank}});
      }
    }
    *out = Dup(result.dump(2) + "\n");
    return status;
  });
}

void iterfix_repair_options_default(iterfix_repair_options* options) {
  if (options == nullptr) return;
  iterfix::engine::EngineConfig c;
  options->k = c.k;
  options->max_iter = c.max_iter;
  options->top_n = c.top_n;
  options->step_budget = c.step_budget;
  options->seed = c.seed;
  options->first_plausible = 0;
  options->prune_worsening = 0;
  options->threads = 0;
}

iterfix_status iterfix_repair(const char* program, const char* suite_json,
                              const iterfix_model* model, const iterfix_repair_options* options,
                              iterfix_trace** out) {
  return Guard([&] {
    Require(program, "program");
    Require(suite_json, "suite_json");
    Require(model, "model");
    Require(options, "options");
    Require(out, "out");
    iterfix::engine::EngineConfig c;
    c.k = options->k;
    c.max_iter = options->max_iter;
    c.top_n = options->top_n;
    c.step_budget = options->step_budget;
    c.seed = options->seed;
    c.stop_policy = options->first_plausible ? iterfix::engine::StopPolicy::kFirstPlausible
                                             : iterfix::engine::StopPolicy::kCollectAll;
    c.prune_worsening = options->prune_worsening != 0;
    c.threads = options->threads;
    iterfix::exec::TestSuite suite = iterfix::exec::ParseSuite(suite_json);
    auto t = std::make_unique<iterfix_trace>();
    t->trace = iterfix::engine::IterRepair(iterfix::lang::SourceProgram{std::string(program)},
                                           suite, c, model->model);
    iterfix_status status = t->trace.pool.empty() ? ITERFIX_NO_RESULT : ITERFIX_OK;
    *out = t.release();
    return status;
  });
}

iterfix_status iterfix_trace_parse(const char* json, iterfix_trace** out) {
  return Guard([&] {
    Require(json, "json");
    Require(out, "out");
    auto t = std::make_unique<iterfix_trace>();
    t->trace = iterfix::engine::TraceFromJson(json);
    *out = t.release();
    return ITERFIX_OK;
  });
}

iterfix_status iterfix_trace_to_json(const iterfix_trace* trace, const char* manifest_json,
                                     char** out) {
  return Guard([&] {
    Require(trace, "trace");
    Require(out, "out");
    *out = Dup(iterfix::engine::TraceToJson(trace->trace,
                                            manifest_json == nullptr ? "" : manifest_json));
    return ITERFIX_OK;
  });
}

size_t iterfix_trace_plausible_count(const iterfix_trace* trace) {
  return trace == nullptr ? 0 : trace->trace.pool.size();
}

void iterfix_trace_free(iterfix_trace* trace) { delete trace; }

iterfix_status iterfix_report_new(iterfix_report** out) {
  return Guard([&] {
    Require(out, "out");
    *out = new iterfix_report();
    return ITERFIX_OK;
  });
}

iterfix_status iterfix_report_add(iterfix_report* report, const iterfix_trace* trace) {
  return Guard([&] {
    Require(report, "report");
    Require(trace, "trace");
    iterfix::engine::Accumulate(report->report, trace->trace);
    return ITERFIX_OK;
  });
}

iterfix_status iterfix_report_to_text(const iterfix_report* report, char** out) {
  return Guard([&] {
    Require(report, "report");
    Require(out, "out");
    *out = Dup(iterfix::engine::ReportToText(report->report));
    return ITERFIX_OK;
  });
}

iterfix_status iterfix_report_to_json(const iterfix_report* report, char** out) {
  return Guard([&] {
    Require(report, "report");
    Require(out, "out");
    *out = Dup(iterfix::engine::ReportToJson(report->report));
    return ITERFIX_OK;
  });
}

void iterfix_report_free(iterfix_report* report) { delete report; }

}  // extern "C"

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

#ifndef ITERFIX_ITERFIX_H_
#define ITERFIX_ITERFIX_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ITERFIX_API __declspec(dllexport)
#else
#define ITERFIX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iterfix_status {
  ITERFIX_OK = 0,
  ITERFIX_NO_RESULT = 1,      /* ran cleanly, nothing found */
  ITERFIX_INVALID_INPUT = 2,  /* bad arguments, files or formats */
  ITERFIX_INTERNAL = 3
} iterfix_status;

typedef struct iterfix_corpus iterfix_corpus;
typedef struct iterfix_model iterfix_model;
typedef struct iterfix_trace iterfix_trace;
typedef struct iterfix_report iterfix_report;

ITERFIX_API const char* iterfix_version(void);
ITERFIX_API const char* iterfix_format_version(void);

/* Message for the last failed call on this thread; "" if none. */
ITERFIX_API const char* iterfix_last_error(void);

/* Frees strings returned through char** out-parameters. */
ITERFIX_API void iterfix_string_free(char* s);

/* FNV-1a 64 of `data`, 16 hex digits. */
ITERFIX_API iterfix_status iterfix_digest(const char* data, size_t size, char** out);

/* Corpus */

ITERFIX_API iterfix_status iterfix_corpus_generate(const char* programs_dir, int per_program,
                                                   uint64_t seed, int locations,
                                                   int64_t step_budget, iterfix_corpus** out);
ITERFIX_API iterfix_status iterfix_corpus_parse(const char* jsonl, iterfix_corpus** out);
ITERFIX_API iterfix_status iterfix_corpus_to_jsonl(const iterfix_corpus* corpus, char** out);
ITERFIX_API size_t iterfix_corpus_size(const iterfix_corpus* corpus);
/* Sample accessors; `index` must be below iterfix_corpus_size. */
ITERFIX_API iterfix_status iterfix_corpus_sample_id(const iterfix_corpus* corpus, size_t index,
                                                    char** out);
ITERFIX_API iterfix_status iterfix_corpus_sample_buggy(const iterfix_corpus* corpus,
                                                       size_t index, char** out);
ITERFIX_API iterfix_status iterfix_corpus_sample_suite(const iterfix_corpus* corpus,
                                                       size_t index, char** out);
ITERFIX_API void iterfix_corpus_free(iterfix_corpus* corpus);

/* Training */

typedef struct iterfix_train_options {
  int k;
  int max_iter;
  uint64_t seed;
  int64_t step_budget;
} iterfix_train_options;

ITERFIX_API void iterfix_train_options_default(iterfix_train_options* options);

/* `augmented` and `growth_table` may be NULL. */
ITERFIX_API iterfix_status iterfix_train(const iterfix_corpus* initial,
                                         const iterfix_train_options* options,
                                         iterfix_model** model, iterfix_corpus** augmented,
                                         char** growth_table);
ITERFIX_API iterfix_status iterfix_model_parse(const char* json, iterfix_model** out);
ITERFIX_API iterfix_status iterfix_model_to_json(const iterfix_model* model, char** out);
ITERFIX_API void iterfix_model_free(iterfix_model* model);

/* Fault localization: {"failing": n, "total": m, "locations": [{line, score, rank}]}.
   ITERFIX_NO_RESULT when the program passes its suite. */
ITERFIX_API iterfix_status iterfix_localize(const char* program, const char* suite_json,
                                            int top_n, int64_t step_budget, char** out);

/* Repair */

typedef struct iterfix_repair_options {
  int k;
  int max_iter;
  int top_n;
  int64_t step_budget;
  uint64_t seed;
  int first_plausible;
  int prune_worsening;
  int threads;
} iterfix_repair_options;

ITERFIX_API void iterfix_repair_options_default(iterfix_repair_options* options);

/* ITERFIX_OK with a nonempty plausible pool, ITERFIX_NO_RESULT with an empty
   one; *out is set in both cases. */
ITERFIX_API iterfix_status iterfix_repair(const char* program, const char* suite_json,
                                          const iterfix_model* model,
                                          const iterfix_repair_options* options,
                                          iterfix_trace** out);
ITERFIX_API iterfix_status iterfix_trace_parse(const char* json, iterfix_trace** out);
/* `manifest_json` may be NULL or a JSON object. */
ITERFIX_API iterfix_status iterfix_trace_to_json(const iterfix_trace* trace,
                                                 const char* manifest_json, char** out);
ITERFIX_API size_t iterfix_trace_plausible_count(const iterfix_trace* trace);
ITERFIX_API void iterfix_trace_free(iterfix_trace* trace);

/* Report */

ITERFIX_API iterfix_status iterfix_report_new(iterfix_report** out);
ITERFIX_API iterfix_status iterfix_report_add(iterfix_report* report, const iterfix_trace* trace);
ITERFIX_API iterfix_status iterfix_report_to_text(const iterfix_report* report, char** out);
ITERFIX_API iterfix_status iterfix_report_to_json(const iterfix_report* report, char** out);
ITERFIX_API void iterfix_report_free(iterfix_report* report);

#ifdef __cplusplus
}
#endif

#endif /* ITERFIX_ITERFIX_H_ */

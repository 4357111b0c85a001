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

// iterfix command line: corpus generation, training, fault localization,
// repair and reporting on top of the C API.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "iterfix/iterfix.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoResult = 1;
constexpr int kExitInvalid = 2;

// Raised for bad input; carries the message printed before exiting with 2.
struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CString {
  char* p = nullptr;
  ~CString() { iterfix_string_free(p); }
  std::string str() const { return p == nullptr ? std::string() : std::string(p); }
};

template <typename T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& o) noexcept : p(o.p) { o.p = nullptr; }
  ~Handle() { Free(p); }
};
using Corpus = Handle<iterfix_corpus, iterfix_corpus_free>;
using Model = Handle<iterfix_model, iterfix_model_free>;
using Trace = Handle<iterfix_trace, iterfix_trace_free>;
using ReportHandle = Handle<iterfix_report, iterfix_report_free>;

// Throws CliError unless status is OK (or NO_RESULT when allowed).
iterfix_status Check(iterfix_status status, bool allow_no_result = false) {
  if (status == ITERFIX_OK || (allow_no_result && status == ITERFIX_NO_RESULT)) return status;
  throw CliError(iterfix_last_error());
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteText(const std::string& path, const std::string& text) {
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw CliError("cannot write " + path);
}

// .mini files end with one newline that is not part of the program.
std::string ReadProgram(const std::string& path) {
  std::string text = ReadText(path);
  if (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

std::string DigestOf(const std::string& data) {
  CString out;
  Check(iterfix_digest(data.data(), data.size(), &out.p));
  return out.str();
}

int Threads() {
  const char* env = std::getenv("ITERFIX_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 0) throw CliError("ITERFIX_THREADS must be a nonnegative integer");
  return static_cast<int>(n);
}

std::string Timestamp() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

// Flags, input digests and the seed. Paths and timestamps vary between
// otherwise identical runs, so they live under "nondeterministic".
class Manifest {
 public:
  explicit Manifest(std::string subcommand) {
    data_["tool"] = "iterfix";
    data_["version"] = iterfix_version();
    data_["format"] = iterfix_format_version();
    data_["subcommand"] = std::move(subcommand);
    data_["flags"] = json::object();
    data_["inputs"] = json::object();
    data_["nondeterministic"] = {{"created", Timestamp()}, {"paths", json::object()}};
  }

  template <typename T>
  void Flag(const std::string& name, const T& value) { data_["flags"][name] = value; }
  void Seed(uint64_t seed) { data_["seed"] = seed; }
  void Input(const std::string& name, const std::string& contents) {
    data_["inputs"][name] = DigestOf(contents);
  }
  void Path(const std::string& name, const std::string& path) {
    data_["nondeterministic"]["paths"][name] = path;
  }
  std::string Dump() const { return data_.dump(); }
  std::string Pretty() const { return data_.dump(2) + "\n"; }

 private:
  json data_;
};

void WriteSidecar(const std::string& out, Manifest& manifest, const std::string& contents) {
  manifest.Input("output", contents);
  WriteText(out + ".manifest.json", manifest.Pretty());
}

std::string SafeName(const std::string& id) {
  std::string name;
  for (char c : id) {
    name += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.' ||
             c == '+' || c == '@' || c == '~')
                ? std::string(1, c)
                : std::string("__");
  }
  return name;
}

struct CorpusArgs {
  std::string programs;
  std::string out;
  uint64_t seed = 42;
  int per_program = 20;
  int locations = 1;
  int64_t step_budget = 100000;
};

int RunCorpus(const CorpusArgs& a) {
  if (!fs::is_directory(a.programs)) throw CliError("programs directory not found: " + a.programs);
  Corpus corpus;
  Check(iterfix_corpus_generate(a.programs.c_str(), a.per_program, a.seed, a.locations,
                                a.step_budget, &corpus.p));
  CString text;
  Check(iterfix_corpus_to_jsonl(corpus.p, &text.p));
  WriteText(a.out, text.str());

  Manifest m("corpus generate");
  m.Seed(a.seed);
  m.Flag("per_program", a.per_program);
  m.Flag("locations", a.locations);
  m.Flag("step_budget", a.step_budget);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.programs)) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const fs::path& f : files) m.Input("programs/" + f.filename().string(), ReadText(f.string()));
  m.Path("programs", a.programs);
  m.Path("out", a.out);
  WriteSidecar(a.out, m, text.str());
  std::cout << iterfix_corpus_size(corpus.p) << " samples written to " << a.out << "\n";
  return kExitOk;
}

struct TrainArgs {
  std::string corpus;
  std::string out;
  std::string augmented_out;
  int k = 2;
  int max_iter = 3;
  uint64_t seed = 42;
  int64_t step_budget = 100000;
};

int RunTrain(TrainArgs a) {
  std::string input = ReadText(a.corpus);
  Corpus corpus;
  Check(iterfix_corpus_parse(input.c_str(), &corpus.p));
  iterfix_train_options options;
  iterfix_train_options_default(&options);
  options.k = a.k;
  options.max_iter = a.max_iter;
  options.seed = a.seed;
  options.step_budget = a.step_budget;
  Model model;
  Corpus augmented;
  CString table;
  Check(iterfix_train(corpus.p, &options, &model.p, &augmented.p, &table.p));
  CString model_json, s_jsonl;
  Check(iterfix_model_to_json(model.p, &model_json.p));
  Check(iterfix_corpus_to_jsonl(augmented.p, &s_jsonl.p));
  if (a.augmented_out.empty()) {
    a.augmented_out = fs::path(a.out).replace_extension(".s.jsonl").string();
  }
  WriteText(a.out, model_json.str());
  WriteText(a.augmented_out, s_jsonl.str());

  Manifest m("train");
  m.Seed(a.seed);
  m.Flag("k", a.k);
  m.Flag("max_iter", a.max_iter);
  m.Flag("step_budget", a.step_budget);
  m.Input("corpus", input);
  m.Input("augmented", s_jsonl.str());
  m.Path("corpus", a.corpus);
  m.Path("out", a.out);
  m.Path("augmented_out", a.augmented_out);
  WriteSidecar(a.out, m, model_json.str());
  std::cout << table.str();
  return kExitOk;
}

struct FlArgs {
  std::string program;
  std::string tests;
  std::string out;
  int top = 50;
  int64_t step_budget = 100000;
  bool json = false;
};

std::string FlTable(const std::string& json_text) {
  nlohmann::json doc = nlohmann::json::parse(json_text);
  std::ostringstream out;
  out << "rank  line  score\n";
  for (const auto& loc : doc["locations"]) {
    char score[32];
    std::snprintf(score, sizeof score, "%.6f", loc["score"].get<double>());
    out << loc["rank"].get<int>() << "  " << loc["line"].get<int>() << "  " << score << "\n";
  }
  return out.str();
}

int RunFl(const FlArgs& a) {
  std::string program = ReadProgram(a.program);
  std::string tests = ReadText(a.tests);
  CString result;
  iterfix_status status =
      Check(iterfix_localize(program.c_str(), tests.c_str(), a.top, a.step_budget, &result.p),
            true);
  std::string text = a.json ? result.str() : FlTable(result.str());
  if (a.out.empty()) {
    std::cout << text;
  } else {
    WriteText(a.out, text);
  }
  return status == ITERFIX_OK ? kExitOk : kExitNoResult;
}

struct RepairArgs {
  std::string program;
  std::string tests;
  std::string corpus;
  std::string model;
  std::string out;
  std::string out_dir;
  int k = 2;
  int max_iter = 3;
  int top = 50;
  uint64_t seed = 42;
  int64_t step_budget = 100000;
  std::string stop_policy = "collect-all";
  bool prune_worsening = false;
};

Manifest RepairManifest(const RepairArgs& a, const iterfix_repair_options& o) {
  Manifest m("repair");
  m.Seed(a.seed);
  m.Flag("k", o.k);
  m.Flag("max_iter", o.max_iter);
  m.Flag("top", o.top_n);
  m.Flag("step_budget", o.step_budget);
  m.Flag("stop_policy", a.stop_policy);
  m.Flag("prune_worsening", a.prune_worsening);
  return m;
}

// Repairs one program; returns the serialized trace and whether the pool is
// nonempty.
std::pair<std::string, bool> RepairOne(const std::string& program, const std::string& tests,
                                       const Model& model, const iterfix_repair_options& options,
                                       Manifest manifest) {
  Trace trace;
  iterfix_status status =
      Check(iterfix_repair(program.c_str(), tests.c_str(), model.p, &options, &trace.p), true);
  manifest.Input("program", program);
  manifest.Input("tests", tests);
  CString text;
  std::string manifest_json = manifest.Dump();
  Check(iterfix_trace_to_json(trace.p, manifest_json.c_str(), &text.p));
  return {text.str(), status == ITERFIX_OK};
}

int RunRepair(const RepairArgs& a) {
  if (a.stop_policy != "collect-all" && a.stop_policy != "first-plausible") {
    throw CliError("--stop-policy must be collect-all or first-plausible");
  }
  iterfix_repair_options options;
  iterfix_repair_options_default(&options);
  options.k = a.k;
  options.max_iter = a.max_iter;
  options.top_n = a.top;
  options.seed = a.seed;
  options.step_budget = a.step_budget;
  options.first_plausible = a.stop_policy == "first-plausible";
  options.prune_worsening = a.prune_worsening;
  options.threads = Threads();

  std::string model_json = ReadText(a.model);
  Model model;
  Check(iterfix_model_parse(model_json.c_str(), &model.p));
  Manifest base = RepairManifest(a, options);
  base.Input("model", model_json);
  base.Path("model", a.model);

  if (!a.corpus.empty()) {
    if (a.out_dir.empty()) throw CliError("--corpus requires --out-dir");
    std::string input = ReadText(a.corpus);
    Corpus corpus;
    Check(iterfix_corpus_parse(input.c_str(), &corpus.p));
    int repaired = 0;
    const size_t n = iterfix_corpus_size(corpus.p);
    for (size_t i = 0; i < n; ++i) {
      CString id, buggy, suite;
      Check(iterfix_corpus_sample_id(corpus.p, i, &id.p));
      Check(iterfix_corpus_sample_buggy(corpus.p, i, &buggy.p));
      Check(iterfix_corpus_sample_suite(corpus.p, i, &suite.p));
      Manifest m = base;
      m.Flag("sample", id.str());
      auto [trace, ok] = RepairOne(buggy.str(), suite.str(), model, options, m);
      WriteText((fs::path(a.out_dir) / (SafeName(id.str()) + ".json")).string(), trace);
      repaired += ok ? 1 : 0;
      std::cout << id.str() << " " << (ok ? "repaired" : "unrepaired") << "\n";
    }
    std::cout << repaired << "/" << n << " repaired\n";
    return repaired > 0 ? kExitOk : kExitNoResult;
  }

  if (a.program.empty() || a.tests.empty() || a.out.empty()) {
    throw CliError("repair needs --program, --tests and --out (or --corpus and --out-dir)");
  }
  std::string program = ReadProgram(a.program);
  std::string tests = ReadText(a.tests);
  base.Path("program", a.program);
  base.Path("tests", a.tests);
  auto [trace, ok] = RepairOne(program, tests, model, options, base);
  WriteText(a.out, trace);
  std::cout << (ok ? "plausible patch found" : "no plausible patch") << "\n";
  return ok ? kExitOk : kExitNoResult;
}

struct ReportArgs {
  std::vector<std::string> traces;
  std::string json_out;
};

int RunReport(const ReportArgs& a) {
  std::vector<fs::path> files;
  for (const std::string& t : a.traces) {
    if (fs::is_directory(t)) {
      for (const auto& entry : fs::directory_iterator(t)) {
        if (entry.path().extension() == ".json") files.push_back(entry.path());
      }
    } else if (fs::exists(t)) {
      files.push_back(t);
    } else {
      throw CliError("no such trace file or directory: " + t);
    }
  }
  std::sort(files.begin(), files.end());
  ReportHandle report;
  Check(iterfix_report_new(&report.p));
  for (const fs::path& f : files) {
    std::string text = ReadText(f.string());
    Trace trace;
    if (iterfix_trace_parse(text.c_str(), &trace.p) != ITERFIX_OK) {
      throw CliError(f.string() + ": " + iterfix_last_error());
    }
    Check(iterfix_report_add(report.p, trace.p));
  }
  CString table;
  Check(iterfix_report_to_text(report.p, &table.p));
  std::cout << table.str();
  CString j;
  Check(iterfix_report_to_json(report.p, &j.p));
  // Wall clock goes to stderr so stdout stays byte-stable across runs.
  double elapsed = nlohmann::json::parse(j.str())["nondeterministic"].value("elapsed_ms", 0.0);
  std::cerr << "wall clock  " << static_cast<int64_t>(elapsed) << " ms\n";
  if (!a.json_out.empty()) WriteText(a.json_out, j.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iterfix: iterative repair of MiniLang programs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("iterfix ") + iterfix_version() + " (format " +
                                        iterfix_format_version() + ")");

  CorpusArgs corpus_args;
  CLI::App* corpus = app.add_subcommand("corpus", "Build training corpora");
  corpus->require_subcommand(1);
  CLI::App* generate = corpus->add_subcommand("generate", "Perturb seed programs into bugs");
  generate->add_option("--programs", corpus_args.programs, "Directory of .mini/.json pairs")
      ->required();
  generate->add_option("--out", corpus_args.out, "Output JSONL")->required();
  generate->add_option("--seed", corpus_args.seed)->capture_default_str();
  generate->add_option("--per-program", corpus_args.per_program)->capture_default_str();
  generate->add_option("--locations", corpus_args.locations)
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  generate->add_option("--step-budget", corpus_args.step_budget)->capture_default_str();

  TrainArgs train_args;
  CLI::App* train = app.add_subcommand("train", "Iterative training on a corpus");
  train->add_option("--corpus", train_args.corpus)->required();
  train->add_option("--out", train_args.out, "Model JSON")->required();
  train->add_option("--augmented-out", train_args.augmented_out,
                    "Augmented corpus (default: <out>.s.jsonl)");
  train->add_option("--k", train_args.k)->capture_default_str();
  train->add_option("--max-iter", train_args.max_iter)->capture_default_str();
  train->add_option("--seed", train_args.seed)->capture_default_str();
  train->add_option("--step-budget", train_args.step_budget)->capture_default_str();

  FlArgs fl_args;
  CLI::App* fl = app.add_subcommand("fl", "Rank suspicious lines with Ochiai");
  fl->add_option("--program", fl_args.program)->required();
  fl->add_option("--tests", fl_args.tests)->required();
  fl->add_option("--top", fl_args.top)->capture_default_str();
  fl->add_option("--out", fl_args.out);
  fl->add_flag("--json", fl_args.json, "Print JSON instead of a table");
  fl->add_option("--step-budget", fl_args.step_budget)->capture_default_str();

  RepairArgs repair_args;
  CLI::App* repair = app.add_subcommand("repair", "Search for plausible patches");
  repair->add_option("--program", repair_args.program);
  repair->add_option("--tests", repair_args.tests);
  repair->add_option("--corpus", repair_args.corpus, "Repair every sample of a corpus");
  repair->add_option("--model", repair_args.model)->required();
  repair->add_option("--out", repair_args.out);
  repair->add_option("--out-dir", repair_args.out_dir);
  repair->add_option("--k", repair_args.k)->capture_default_str();
  repair->add_option("--max-iter", repair_args.max_iter)->capture_default_str();
  repair->add_option("--top", repair_args.top)->capture_default_str();
  repair->add_option("--seed", repair_args.seed)->capture_default_str();
  repair->add_option("--step-budget", repair_args.step_budget)->capture_default_str();
  repair->add_option("--stop-policy", repair_args.stop_policy)->capture_default_str();
  repair->add_flag("--prune-worsening", repair_args.prune_worsening);

  ReportArgs report_args;
  CLI::App* report = app.add_subcommand("report", "Summarize repair traces");
  report->add_option("traces", report_args.traces, "Trace files or directories")->required();
  report->add_option("--json", report_args.json_out, "Also write the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*generate) return RunCorpus(corpus_args);
    if (*train) return RunTrain(train_args);
    if (*fl) return RunFl(fl_args);
    if (*repair) return RunRepair(repair_args);
    if (*report) return RunReport(report_args);
  } catch (const CliError& e) {
    std::cerr << "iterfix: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "iterfix: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

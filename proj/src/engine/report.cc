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

#include "engine/report.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "common/errors.h"
#include "json.hpp"

namespace iterfix::engine {

using nlohmann::json;

void Accumulate(Report& report, const RepairTrace& trace) {
  ++report.traces;
  if (!trace.pool.empty()) ++report.repaired;
  for (const PlausibleEntry& entry : trace.pool) {
    ++report.plausible_by_depth[static_cast<int>(entry.chain.size())];
    ++report.paths[entry.path];
  }
  for (const RepairState& s : trace.states) {
    if (!s.fl_snapshot) continue;
    ++report.fl_runs;
    if (s.parent >= 0) ++report.fl_reexecutions;
  }
  report.states += static_cast<int>(trace.states.size());
  report.elapsed_ms += trace.elapsed_ms;
}

namespace {

int TotalPlausible(const Report& report) {
  int total = 0;
  for (const auto& [path, count] : report.paths) total += count;
  return total;
}

// Every P1..P7 row (zero counts included), then unlabelled paths alphabetically.
std::vector<std::pair<std::string, int>> OrderedPaths(const Report& report) {
  std::vector<std::pair<std::string, int>> rows;
  for (const char* path : {"plausible", "CE->plausible", "FE->plausible", "CE->CE->plausible",
                           "CE->FE->plausible", "FE->CE->plausible", "FE->FE->plausible"}) {
    auto it = report.paths.find(path);
    rows.emplace_back(path, it == report.paths.end() ? 0 : it->second);
  }
  for (const auto& [path, count] : report.paths) {
    if (PathLabel(path).empty()) rows.emplace_back(path, count);
  }
  return rows;
}

// Iterations 1..max(3, deepest recorded), zeros included.
std::map<int, int> DepthRows(const Report& report) {
  std::map<int, int> rows;
  int deepest = report.plausible_by_depth.empty() ? 0 : report.plausible_by_depth.rbegin()->first;
  for (int d = 1; d <= std::max(3, deepest); ++d) rows[d] = 0;
  for (const auto& [depth, count] : report.plausible_by_depth) rows[depth] = count;
  return rows;
}

std::string Share(int count, int total) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", total == 0 ? 0.0 : 100.0 * count / total);
  return buf;
}

}  // namespace

std::string ReportToText(const Report& report) {
  const int total = TotalPlausible(report);
  std::ostringstream out;
  out << "traces            " << report.traces << "\n"
      << "repaired          " << report.repaired << "\n"
      << "plausible         " << total << "\n"
      << "fl runs           " << report.fl_runs << "\n"
      << "fl re-executions  " << report.fl_reexecutions << "\n"
      << "states            " << report.states << "\n\n";
  out << "iteration  plausible\n";
  for (const auto& [depth, count] : DepthRows(report)) {
    out << depth << "          " << count << "\n";
  }
  out << "\nlabel  path                        count  share\n";
  for (const auto& [path, count] : OrderedPaths(report)) {
    char row[160];
    std::string label = PathLabel(path);
    std::snprintf(row, sizeof row, "%-6s %-27s %5d  %s\n", label.empty() ? "-" : label.c_str(),
                  path.c_str(), count, Share(count, total).c_str());
    out << row;
  }
  return out.str();
}

std::string ReportToJson(const Report& report) {
  const int total = TotalPlausible(report);
  json by_depth = json::object();
  for (const auto& [depth, count] : DepthRows(report)) {
    by_depth[std::to_string(depth)] = count;
  }
  json paths = json::array();
  for (const auto& [path, count] : OrderedPaths(report)) {
    paths.push_back({{"label", PathLabel(path)},
                     {"path", path},
                     {"count", count},
                     {"share", total == 0 ? 0.0 : static_cast<double>(count) / total}});
  }
  json out{{"traces", report.traces},
           {"repaired", report.repaired},
           {"plausible", total},
           {"plausible_by_depth", by_depth},
           {"paths", paths},
           {"fl_runs", report.fl_runs},
           {"fl_reexecutions", report.fl_reexecutions},
           {"states", report.states},
           {"nondeterministic", {{"elapsed_ms", report.elapsed_ms}}}};
  return out.dump(2) + "\n";
}

Report ReportFromJson(std::string_view json_text) {
  try {
    json in = json::parse(json_text);
    Report report;
    report.traces = in.at("traces").get<int>();
    report.repaired = in.at("repaired").get<int>();
    for (const auto& [depth, count] : in.at("plausible_by_depth").items()) {
      if (count.get<int>() != 0) report.plausible_by_depth[std::stoi(depth)] = count.get<int>();
    }
    for (const json& row : in.at("paths")) {
      int count = row.at("count").get<int>();
      if (count != 0) report.paths[row.at("path").get<std::string>()] = count;
    }
    report.fl_runs = in.at("fl_runs").get<int>();
    report.fl_reexecutions = in.at("fl_reexecutions").get<int>();
    report.states = in.at("states").get<int>();
    report.elapsed_ms = in.at("nondeterministic").value("elapsed_ms", 0.0);
    return report;
  } catch (const std::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace iterfix::engine

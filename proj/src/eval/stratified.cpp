// Copyright 2026 The argtree Authors.
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

#include "argtree/eval/stratified.hpp"

#include <algorithm>

#include "argtree/common/error.hpp"
#include "argtree/common/format.hpp"
#include "argtree/corpus/text.hpp"

namespace argtree {

const StratumResult& EvalReport::overall() const {
  if (const auto* s = find("all")) return *s;
  throw DataError("report for '" + model + "' has no 'all' stratum");
}

const StratumResult* EvalReport::find(std::string_view name) const {
  for (const auto& s : strata) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

namespace {

// Distance of a "d<k>" stratum, or 0 when `name` is not one.
int stratum_distance(std::string_view name) {
  if (name.size() < 2 || name[0] != 'd') return 0;
  int k = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9' || k > 100000) return 0;
    k = k * 10 + (c - '0');
  }
  return name[1] == '0' ? 0 : k;
}

}  // namespace

std::vector<std::string> parse_strata(std::string_view comma_list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= comma_list.size()) {
    std::size_t end = comma_list.find(',', start);
    if (end == std::string_view::npos) end = comma_list.size();
    const std::string name(trim(comma_list.substr(start, end - start)));
    if (name != "all" && name != "same-stance" && stratum_distance(name) == 0) {
      throw UsageError("unknown stratum '" + name + "' (expected all, d<k> or same-stance)");
    }
    if (std::find(out.begin(), out.end(), name) != out.end()) throw UsageError("stratum '" + name + "' listed twice");
    out.push_back(name);
    start = end + 1;
  }
  return out;
}

std::vector<std::string> default_strata(Task task, std::span<const EvalRecord> records) {
  int max_distance = 0;
  for (const auto& r : records) max_distance = std::max(max_distance, r.distance);
  std::vector<std::string> out{"all"};
  for (int d = 1; d <= max_distance; ++d) out.push_back("d" + std::to_string(d));
  if (task == Task::Specificity) out.push_back("same-stance");
  return out;
}

EvalReport stratified_eval(const std::string& model, Task task, std::span<const EvalRecord> records,
                           const std::vector<std::string>& strata) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].distance <= 0) {
      throw DataError("missing metadata: example " + std::to_string(i + 1) + " has no distance");
    }
  }
  EvalReport report;
  report.model = model;
  report.task = task;
  for (const auto& name : strata) {
    StratumResult s;
    s.name = name;
    if (name == "same-stance" && task == Task::Stance) {
      throw UsageError("the same-stance stratum applies to specificity only");
    }
    const int d = stratum_distance(name);
    for (const auto& r : records) {
      bool in = name == "all" || (d > 0 && r.distance == d) || (name == "same-stance" && r.same_stance == true);
      if (!in) continue;
      ++s.count;
      s.correct += r.gold == r.predicted;
    }
    report.strata.push_back(std::move(s));
  }
  return report;
}

std::map<std::string, std::pair<std::size_t, std::size_t>> per_topic_counts(std::span<const EvalRecord> records) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> out;
  for (const auto& r : records) {
    auto& [correct, count] = out[r.topic_id];
    correct += r.gold == r.predicted;
    ++count;
  }
  return out;
}

}  // namespace argtree

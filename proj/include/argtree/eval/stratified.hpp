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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "argtree/pairs/examples.hpp"

namespace argtree {

// One scored test example.
struct EvalRecord {
  std::string topic_id;
  int distance = 0;
  std::optional<bool> same_stance;  // specificity only; nullopt = "n/a"
  int gold = 0;
  int predicted = 0;
};

struct StratumResult {
  std::string name;
  std::size_t count = 0;
  std::size_t correct = 0;

  // correct / count; 0 for an empty stratum.
  double accuracy() const { return count ? static_cast<double>(correct) / static_cast<double>(count) : 0.0; }
  bool operator==(const StratumResult&) const = default;
};

struct EvalReport {
  std::string model;
  Task task = Task::Specificity;
  std::vector<StratumResult> strata;

  // The "all" stratum; throws DataError when the report has none.
  const StratumResult& overall() const;
  const StratumResult* find(std::string_view name) const;
  bool operator==(const EvalReport&) const = default;
};

// Stratum names: "all", "d<k>" for k >= 1, and "same-stance" (specificity
// only). Throws UsageError on anything else.
std::vector<std::string> parse_strata(std::string_view comma_list);

// "all", d1 .. d<max distance in records>, plus "same-stance" for specificity.
std::vector<std::string> default_strata(Task task, std::span<const EvalRecord> records);

// Throws DataError when a record lacks a positive distance, and UsageError
// when "same-stance" is requested for the stance task.
EvalReport stratified_eval(const std::string& model, Task task, std::span<const EvalRecord> records,
                           const std::vector<std::string>& strata);

// topic_id -> (correct, count)
std::map<std::string, std::pair<std::size_t, std::size_t>> per_topic_counts(std::span<const EvalRecord> records);

}  // namespace argtree

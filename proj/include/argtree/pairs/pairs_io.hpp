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

#include <filesystem>
#include <string>
#include <vector>

#include "argtree/pairs/examples.hpp"

namespace argtree {

std::string format_example(const SpecificityExample& example);
std::string format_example(const StanceExample& example);

// Every line of a pairs file carries the same task.
struct PairDataset {
  Task task = Task::Specificity;
  std::vector<SpecificityExample> specificity;
  std::vector<StanceExample> stance;

  std::size_t size() const { return task == Task::Specificity ? specificity.size() : stance.size(); }
};

std::string format_pairs(const std::vector<SpecificityExample>& examples);
std::string format_pairs(const std::vector<StanceExample>& examples);

// Throws DataError with the line number on malformed records or mixed tasks.
// An empty file yields an empty dataset whose task is `fallback`.
PairDataset parse_pairs(std::istream& in, Task fallback = Task::Specificity);
PairDataset load_pairs(const std::filesystem::path& path);

}  // namespace argtree

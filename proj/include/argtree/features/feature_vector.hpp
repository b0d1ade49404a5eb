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
#include <string>
#include <utility>
#include <vector>

namespace argtree {

struct FeatureVector {
  std::map<std::size_t, double> sparse;               // vocabulary index -> value
  std::vector<std::pair<std::string, double>> dense;  // stable names

  void add_dense(std::string name, double value) { dense.emplace_back(std::move(name), value); }
  // Value of a dense feature; throws std::out_of_range when absent.
  double dense_value(const std::string& name) const;
  std::vector<std::string> dense_names() const;
  bool all_finite() const;

  bool operator==(const FeatureVector&) const = default;
};

}  // namespace argtree

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

#include "argtree/features/feature_vector.hpp"

#include <cmath>
#include <stdexcept>

namespace argtree {

double FeatureVector::dense_value(const std::string& name) const {
  for (const auto& [n, v] : dense) {
    if (n == name) return v;
  }
  throw std::out_of_range("no dense feature '" + name + "'");
}

std::vector<std::string> FeatureVector::dense_names() const {
  std::vector<std::string> names;
  names.reserve(dense.size());
  for (const auto& entry : dense) names.push_back(entry.first);
  return names;
}

bool FeatureVector::all_finite() const {
  for (const auto& [i, v] : sparse) {
    if (!std::isfinite(v)) return false;
  }
  for (const auto& [n, v] : dense) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace argtree

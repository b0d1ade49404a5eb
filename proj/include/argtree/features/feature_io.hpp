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
#include <optional>
#include <string>
#include <vector>

#include "argtree/features/feature_vector.hpp"
#include "argtree/pairs/examples.hpp"

namespace argtree {

struct FeatureSchema {
  Task task = Task::Specificity;
  std::string tag;                        // must match between train and predict
  std::vector<std::string> sparse_names;  // one per sparse index
  std::vector<std::string> dense_names;

  // Derives `tag` from the task, the feature-set label and a hash of the names.
  static FeatureSchema make(Task task, const std::string& label, std::vector<std::string> sparse_names,
                            std::vector<std::string> dense_names);
};

struct FeatureRow {
  std::string topic_id;
  int distance = 0;
  std::optional<bool> same_stance;
  int label = 0;  // 1 = positive class
  FeatureVector features;
};

struct FeatureDataset {
  FeatureSchema schema;
  std::vector<FeatureRow> rows;
};

std::string format_features(const FeatureDataset& data);
FeatureDataset parse_features(std::istream& in);
FeatureDataset load_features(const std::filesystem::path& path);

}  // namespace argtree

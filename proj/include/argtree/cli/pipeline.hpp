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
#include <functional>
#include <string>
#include <vector>

#include "argtree/cli/run_config.hpp"
#include "argtree/eval/stratified.hpp"
#include "argtree/features/feature_io.hpp"
#include "argtree/models/checkpoint.hpp"
#include "argtree/models/neural.hpp"
#include "argtree/models/train_config.hpp"
#include "argtree/pairs/pairs_io.hpp"

namespace argtree {

// Training settings resolved from a RunConfig for one model kind.
struct TrainOptions {
  TrainConfig train;
  NeuralConfig neural;
  std::size_t min_count = 2;           // neural vocabulary cutoff
  std::size_t max_train_examples = 0;  // 0 = all; otherwise a seeded sample
  std::uint64_t seed = 0;

  static TrainOptions from(ModelKind kind, const RunConfig& config, std::uint64_t seed);
  // key=value pairs recorded in checkpoints.
  std::vector<std::pair<std::string, std::string>> describe(ModelKind kind) const;
};

using Logger = std::function<void(const std::string&)>;

// Majority, length and neural models train on pairs.
TrainedModel train_on_pairs(ModelKind kind, const PairDataset& train, const PairDataset& dev,
                            const TrainOptions& options, const Logger& log = {});
// Majority and logistic regression train on feature files.
TrainedModel train_on_features(ModelKind kind, const FeatureDataset& train, const FeatureDataset& dev,
                               const TrainOptions& options, const Logger& log = {});

// Predictions in input order; `threads` workers split the examples into
// contiguous blocks.
std::vector<EvalRecord> score_pairs(const TrainedModel& model, const PairDataset& test, std::size_t threads = 1);
std::vector<EvalRecord> score_features(const TrainedModel& model, const FeatureDataset& test);

}  // namespace argtree

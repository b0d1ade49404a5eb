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

#include <functional>
#include <span>
#include <vector>

#include "argtree/models/neural.hpp"
#include "argtree/models/train_config.hpp"

namespace argtree {

struct EpochRecord {
  std::size_t epoch = 0;
  double train_loss = 0.0;  // mean objective over the epoch's batches
  double dev_accuracy = 0.0;
};

struct NeuralTrainResult {
  double initial_loss = 0.0;
  double best_dev_accuracy = 0.0;
  std::size_t best_epoch = 0;
  std::vector<EpochRecord> history;
};

// Mini-batch training with the configured optimizer and early stopping on dev
// accuracy. Batch order is a seeded shuffle per epoch, so results are
// bit-identical given (seed, data, config). `model` is left holding the
// best-dev parameters. Throws DataError on empty splits, non-finite loss, or
// divergence (epoch loss above 10x the initial loss for two epochs).
NeuralTrainResult train_neural(NeuralModel& model, std::span<const NeuralExample> train,
                               std::span<const NeuralExample> dev, const TrainConfig& config,
                               const std::function<void(const EpochRecord&)>& on_epoch = {});

double neural_accuracy(const NeuralModel& model, std::span<const NeuralExample> examples);

}  // namespace argtree

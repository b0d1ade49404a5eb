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

#include "argtree/models/neural_train.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "argtree/common/error.hpp"
#include "argtree/common/rng.hpp"
#include "argtree/models/optimizer.hpp"

namespace argtree {

double neural_accuracy(const NeuralModel& model, std::span<const NeuralExample> examples) {
  if (examples.empty()) throw DataError("cannot compute accuracy on an empty set");
  std::size_t correct = 0;
  for (const auto& ex : examples) correct += model.predict(ex) == ex.label;
  return static_cast<double>(correct) / static_cast<double>(examples.size());
}

NeuralTrainResult train_neural(NeuralModel& model, std::span<const NeuralExample> train,
                               std::span<const NeuralExample> dev, const TrainConfig& config,
                               const std::function<void(const EpochRecord&)>& on_epoch) {
  config.validate();
  if (train.empty()) throw DataError("training split is empty");
  if (dev.empty()) throw DataError("dev split is empty");

  NeuralTrainResult result;
  result.initial_loss = model.objective(train.first(std::min<std::size_t>(train.size(), 4096)), config.l2, nullptr);
  if (!std::isfinite(result.initial_loss)) throw DataError("initial loss is not finite");

  GradientDescent optimizer(model.params(), config);
  ParamSet grad = model.params().zeros_like();
  ParamSet best = model.params();
  result.best_dev_accuracy = -1.0;

  std::vector<std::size_t> order(train.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(config.seed);
  std::vector<NeuralExample> batch;
  std::size_t stale = 0, diverged = 0;

  for (std::size_t epoch = 1; epoch <= config.max_epochs; ++epoch) {
    rng.shuffle(order);
    double loss_sum = 0.0;
    std::size_t batches = 0;
    for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
      const std::size_t end = std::min(order.size(), start + config.batch_size);
      batch.clear();
      for (std::size_t k = start; k < end; ++k) batch.push_back(train[order[k]]);
      grad.set_zero();
      const double loss = model.objective(batch, config.l2, &grad);
      if (!std::isfinite(loss) || !grad.all_finite()) {
        throw DataError("non-finite loss at epoch " + std::to_string(epoch) + ", batch " +
                        std::to_string(batches + 1) + "; lower the learning rate");
      }
      optimizer.step(model.params(), grad);
      loss_sum += loss;
      ++batches;
    }
    EpochRecord record;
    record.epoch = epoch;
    record.train_loss = loss_sum / static_cast<double>(batches);
    record.dev_accuracy = neural_accuracy(model, dev);
    result.history.push_back(record);
    if (on_epoch) on_epoch(record);

    if (record.train_loss > 10.0 * result.initial_loss) {
      if (++diverged >= 2) {
        throw DataError("training diverged: epoch loss " + std::to_string(record.train_loss) +
                        " exceeded 10x the initial loss " + std::to_string(result.initial_loss) +
                        " for two epochs");
      }
    } else {
      diverged = 0;
    }

    if (record.dev_accuracy > result.best_dev_accuracy) {
      result.best_dev_accuracy = record.dev_accuracy;
      result.best_epoch = epoch;
      best = model.params();
      stale = 0;
    } else if (++stale >= config.patience) {
      break;
    }
  }
  model.params() = std::move(best);
  return result;
}

}  // namespace argtree

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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "argtree/features/feature_io.hpp"
#include "argtree/models/train_config.hpp"

namespace argtree {

// Binary logistic regression over [sparse block | standardized dense block].
struct LogRegModel {
  std::string schema_tag;
  std::vector<std::string> feature_names;  // sparse names, then dense names
  std::size_t sparse_dim = 0;
  Eigen::VectorXd weights;
  double bias = 0.0;
  Eigen::VectorXd dense_mean;   // train-split statistics
  Eigen::VectorXd dense_scale;  // 1 / stddev, or 1 for constant features
  std::size_t best_epoch = 0;
  double dev_accuracy = 0.0;

  std::size_t dense_dim() const { return feature_names.size() - sparse_dim; }
};

struct EncodedRow {
  std::vector<std::pair<std::size_t, double>> x;
  int y = 0;
};

struct LogRegPrediction {
  int label = 1;
  double probability = 0.5;  // of the positive class
};

// Zero weights and identity standardization for `schema`.
LogRegModel init_logreg(const FeatureSchema& schema);

// Sets dense_mean / dense_scale from training rows.
void fit_standardizer(LogRegModel& model, std::span<const FeatureRow> rows);

EncodedRow encode_row(const LogRegModel& model, const FeatureVector& features, int label = 0);

double sigmoid(double z);
double logreg_margin(const LogRegModel& model, const EncodedRow& row);

// Mean logistic loss + (l2 / 2) * ||w||^2. The bias is not regularized.
double logreg_objective(const LogRegModel& model, std::span<const EncodedRow> rows, double l2);

struct LogRegGradient {
  Eigen::VectorXd weights;
  double bias = 0.0;
};

// Gradient of the mean logistic loss alone: mean of (sigmoid(w.x+b) - y) x.
LogRegGradient logreg_loss_gradient(const LogRegModel& model, std::span<const EncodedRow> rows);

// One descent step: the loss gradient step followed by the exact proximal
// step of the L2 term, w <- (w - lr g) / (1 + lr l2), stable for any l2.
void logreg_step(LogRegModel& model, const LogRegGradient& gradient, double learning_rate, double l2);

// Seeded mini-batch training with early stopping on dev accuracy; returns
// the best-dev parameters. Throws DataError on schema mismatch, empty splits
// or non-finite values.
LogRegModel train_logreg(const FeatureDataset& train, const FeatureDataset& dev, const TrainConfig& config);

// Throws DataError when `schema_tag` differs from the model's.
LogRegPrediction predict_logreg(const LogRegModel& model, const FeatureVector& features,
                                const std::string& schema_tag);

struct TopFeatures {
  std::vector<std::pair<std::string, double>> positive;  // strongest first
  std::vector<std::pair<std::string, double>> negative;
};

TopFeatures top_features(const LogRegModel& model, std::size_t k);

}  // namespace argtree

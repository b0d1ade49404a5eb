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

#include "argtree/models/logreg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "argtree/common/error.hpp"
#include "argtree/common/rng.hpp"

namespace argtree {

LogRegModel init_logreg(const FeatureSchema& schema) {
  LogRegModel model;
  model.schema_tag = schema.tag;
  model.feature_names = schema.sparse_names;
  model.feature_names.insert(model.feature_names.end(), schema.dense_names.begin(), schema.dense_names.end());
  model.sparse_dim = schema.sparse_names.size();
  model.weights = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(model.feature_names.size()));
  model.dense_mean = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(schema.dense_names.size()));
  model.dense_scale = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(schema.dense_names.size()));
  return model;
}

namespace {

void check_dense(const LogRegModel& model, const FeatureVector& features) {
  if (features.dense.size() != model.dense_dim()) {
    throw DataError("feature row has " + std::to_string(features.dense.size()) + " dense values, model expects " +
                    std::to_string(model.dense_dim()));
  }
  for (std::size_t j = 0; j < features.dense.size(); ++j) {
    if (features.dense[j].first != model.feature_names[model.sparse_dim + j]) {
      throw DataError("dense feature '" + features.dense[j].first + "' where the model expects '" +
                      model.feature_names[model.sparse_dim + j] + "'");
    }
  }
}

}  // namespace

void fit_standardizer(LogRegModel& model, std::span<const FeatureRow> rows) {
  const auto d = static_cast<Eigen::Index>(model.dense_dim());
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(d), sq = Eigen::VectorXd::Zero(d);
  for (const auto& row : rows) {
    check_dense(model, row.features);
    for (Eigen::Index j = 0; j < d; ++j) {
      double v = row.features.dense[static_cast<std::size_t>(j)].second;
      sum[j] += v;
      sq[j] += v * v;
    }
  }
  const double n = rows.empty() ? 1.0 : static_cast<double>(rows.size());
  model.dense_mean = sum / n;
  model.dense_scale.resize(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    double var = std::max(0.0, sq[j] / n - model.dense_mean[j] * model.dense_mean[j]);
    double sd = std::sqrt(var);
    model.dense_scale[j] = sd > 1e-12 ? 1.0 / sd : 1.0;
  }
}

EncodedRow encode_row(const LogRegModel& model, const FeatureVector& features, int label) {
  check_dense(model, features);
  EncodedRow row;
  row.y = label;
  row.x.reserve(features.sparse.size() + features.dense.size());
  for (const auto& [index, value] : features.sparse) {
    if (index < model.sparse_dim && value != 0.0) row.x.emplace_back(index, value);
  }
  for (std::size_t j = 0; j < features.dense.size(); ++j) {
    const auto k = static_cast<Eigen::Index>(j);
    double v = (features.dense[j].second - model.dense_mean[k]) * model.dense_scale[k];
    row.x.emplace_back(model.sparse_dim + j, v);
  }
  return row;
}

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}

double logreg_margin(const LogRegModel& model, const EncodedRow& row) {
  double z = model.bias;
  for (const auto& [i, v] : row.x) z += model.weights[static_cast<Eigen::Index>(i)] * v;
  return z;
}

namespace {

// log(1 + exp(-z)) without overflow.
double softplus_neg(double z) { return z > 0 ? std::log1p(std::exp(-z)) : -z + std::log1p(std::exp(z)); }

}  // namespace

double logreg_objective(const LogRegModel& model, std::span<const EncodedRow> rows, double l2) {
  double loss = 0.0;
  for (const auto& row : rows) {
    double z = logreg_margin(model, row);
    loss += row.y == 1 ? softplus_neg(z) : softplus_neg(-z);
  }
  if (!rows.empty()) loss /= static_cast<double>(rows.size());
  return loss + 0.5 * l2 * model.weights.squaredNorm();
}

LogRegGradient logreg_loss_gradient(const LogRegModel& model, std::span<const EncodedRow> rows) {
  LogRegGradient g;
  g.weights = Eigen::VectorXd::Zero(model.weights.size());
  if (rows.empty()) return g;
  const double inv = 1.0 / static_cast<double>(rows.size());
  for (const auto& row : rows) {
    double r = (sigmoid(logreg_margin(model, row)) - row.y) * inv;
    for (const auto& [i, v] : row.x) g.weights[static_cast<Eigen::Index>(i)] += r * v;
    g.bias += r;
  }
  return g;
}

void logreg_step(LogRegModel& model, const LogRegGradient& gradient, double learning_rate, double l2) {
  model.weights = (model.weights - learning_rate * gradient.weights) / (1.0 + learning_rate * l2);
  model.bias -= learning_rate * gradient.bias;
}

namespace {

double accuracy_on(const LogRegModel& model, std::span<const EncodedRow> rows) {
  std::size_t correct = 0;
  for (const auto& row : rows) correct += (logreg_margin(model, row) >= 0.0 ? 1 : 0) == row.y;
  return static_cast<double>(correct) / static_cast<double>(rows.size());
}

}  // namespace

LogRegModel train_logreg(const FeatureDataset& train, const FeatureDataset& dev, const TrainConfig& config) {
  config.validate();
  if (train.rows.empty()) throw DataError("training split is empty");
  if (dev.rows.empty()) throw DataError("dev split is empty");
  if (train.schema.tag != dev.schema.tag) {
    throw DataError("feature schema mismatch: train '" + train.schema.tag + "' vs dev '" + dev.schema.tag + "'");
  }
  if (train.schema.task != dev.schema.task) throw DataError("train and dev feature files are for different tasks");

  LogRegModel model = init_logreg(train.schema);
  fit_standardizer(model, train.rows);

  auto encode_all = [&](const FeatureDataset& data, const char* split) {
    std::vector<EncodedRow> out;
    out.reserve(data.rows.size());
    for (std::size_t i = 0; i < data.rows.size(); ++i) {
      const auto& r = data.rows[i];
      if (!r.features.all_finite()) {
        throw DataError(std::string(split) + " row " + std::to_string(i + 1) + " has a non-finite feature value");
      }
      out.push_back(encode_row(model, r.features, r.label));
    }
    return out;
  };
  const std::vector<EncodedRow> train_rows = encode_all(train, "train");
  const std::vector<EncodedRow> dev_rows = encode_all(dev, "dev");

  std::vector<std::size_t> order(train_rows.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(config.seed);

  LogRegModel best = model;
  double best_acc = -1.0;
  std::size_t stale = 0;
  std::vector<EncodedRow> batch;
  for (std::size_t epoch = 1; epoch <= config.max_epochs; ++epoch) {
    rng.shuffle(order);
    for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
      std::size_t end = std::min(order.size(), start + config.batch_size);
      batch.clear();
      for (std::size_t k = start; k < end; ++k) batch.push_back(train_rows[order[k]]);
      logreg_step(model, logreg_loss_gradient(model, batch), config.learning_rate, config.l2);
    }
    if (!model.weights.allFinite() || !std::isfinite(model.bias)) {
      throw DataError("logistic regression diverged at epoch " + std::to_string(epoch) +
                      " (non-finite weights); lower the learning rate");
    }
    double acc = accuracy_on(model, dev_rows);
    if (acc > best_acc) {
      best_acc = acc;
      best = model;
      best.best_epoch = epoch;
      best.dev_accuracy = acc;
      stale = 0;
    } else if (++stale >= config.patience) {
      break;
    }
  }
  return best;
}

LogRegPrediction predict_logreg(const LogRegModel& model, const FeatureVector& features,
                                const std::string& schema_tag) {
  if (schema_tag != model.schema_tag) {
    throw DataError("feature schema mismatch: model was trained on '" + model.schema_tag + "', got '" + schema_tag +
                    "'");
  }
  double z = logreg_margin(model, encode_row(model, features));
  LogRegPrediction p;
  p.probability = sigmoid(z);
  p.label = z >= 0.0 ? 1 : 0;
  return p;
}

TopFeatures top_features(const LogRegModel& model, std::size_t k) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(model.weights.size()));
  std::iota(idx.begin(), idx.end(), 0);
  auto w = [&](std::size_t i) { return model.weights[static_cast<Eigen::Index>(i)]; };
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return w(a) > w(b); });
  TopFeatures out;
  for (std::size_t i : idx) {
    if (out.positive.size() >= k || w(i) <= 0.0) break;
    out.positive.emplace_back(model.feature_names[i], w(i));
  }
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    if (out.negative.size() >= k || w(*it) >= 0.0) break;
    out.negative.emplace_back(model.feature_names[*it], w(*it));
  }
  return out;
}

}  // namespace argtree

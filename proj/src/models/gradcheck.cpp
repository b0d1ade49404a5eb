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

#include "argtree/models/gradcheck.hpp"

#include <algorithm>
#include <cmath>

#include "argtree/common/error.hpp"
#include "argtree/common/rng.hpp"
#include "argtree/models/logreg.hpp"
#include "argtree/models/neural.hpp"

namespace argtree {

namespace {

void record(GradCheckResult& result, double analytic, double numeric) {
  if (!std::isfinite(analytic) || !std::isfinite(numeric)) throw DataError("gradient check hit a non-finite value");
  result.max_relative_error =
      std::max(result.max_relative_error, std::abs(analytic - numeric) / std::max(1.0, std::abs(numeric)));
  ++result.parameters;
}

GradCheckResult check_logreg(double eps, std::uint64_t seed) {
  Rng rng(seed);
  FeatureSchema schema = FeatureSchema::make(Task::Specificity, "gradcheck", {"a", "b", "c"}, {"x", "y"});
  LogRegModel model = init_logreg(schema);
  for (Eigen::Index i = 0; i < model.weights.size(); ++i) model.weights[i] = rng.uniform(-1.0, 1.0);
  model.bias = rng.uniform(-1.0, 1.0);
  std::vector<EncodedRow> rows;
  for (int n = 0; n < 5; ++n) {
    FeatureVector fv;
    for (std::size_t s = 0; s < 3; ++s) {
      if (rng.bernoulli(0.6)) fv.sparse[s] = static_cast<double>(rng.between(1, 3));
    }
    fv.add_dense("x", rng.uniform(-2.0, 2.0));
    fv.add_dense("y", rng.uniform(-2.0, 2.0));
    rows.push_back(encode_row(model, fv, rng.bernoulli(0.5) ? 1 : 0));
  }
  const double l2 = 0.1;
  LogRegGradient g = logreg_loss_gradient(model, rows);
  g.weights += l2 * model.weights;

  GradCheckResult result;
  for (Eigen::Index i = 0; i < model.weights.size(); ++i) {
    const double saved = model.weights[i];
    model.weights[i] = saved + eps;
    const double up = logreg_objective(model, rows, l2);
    model.weights[i] = saved - eps;
    const double down = logreg_objective(model, rows, l2);
    model.weights[i] = saved;
    record(result, g.weights[i], (up - down) / (2 * eps));
  }
  const double saved = model.bias;
  model.bias = saved + eps;
  const double up = logreg_objective(model, rows, l2);
  model.bias = saved - eps;
  const double down = logreg_objective(model, rows, l2);
  model.bias = saved;
  record(result, g.bias, (up - down) / (2 * eps));
  return result;
}

GradCheckResult check_neural(ModelKind kind, double eps, std::uint64_t seed) {
  NeuralConfig config;
  config.dim = 4;
  config.hidden = 3;
  config.max_tokens = 8;
  NeuralModel model(kind, {"w0", "w1", "w2", "w3", "w4", "w5"}, config, seed);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const int id_count = static_cast<int>(model.params()[0].rows());
  std::vector<NeuralExample> batch;
  for (int n = 0; n < 3; ++n) {
    NeuralExample ex;
    const int claims = kind == ModelKind::Pair ? 2 : 2 + n;
    for (int c = 0; c < claims; ++c) {
      std::vector<int> ids(static_cast<std::size_t>(rng.between(1, 5)));
      for (int& id : ids) id = rng.between(0, id_count - 1);
      ex.texts.push_back(std::move(ids));
    }
    ex.label = n % 2;
    batch.push_back(std::move(ex));
  }
  const double l2 = 0.01;
  ParamSet grad = model.params().zeros_like();
  model.objective(batch, l2, &grad);

  GradCheckResult result;
  for (std::size_t b = 0; b < model.params().count(); ++b) {
    Eigen::MatrixXd& block = model.params()[b];
    for (Eigen::Index k = 0; k < block.size(); ++k) {
      const double saved = block.data()[k];
      block.data()[k] = saved + eps;
      const double up = model.objective(batch, l2, nullptr);
      block.data()[k] = saved - eps;
      const double down = model.objective(batch, l2, nullptr);
      block.data()[k] = saved;
      record(result, grad[b].data()[k], (up - down) / (2 * eps));
    }
  }
  return result;
}

}  // namespace

GradCheckResult gradient_check(ModelKind kind, double epsilon, std::uint64_t seed) {
  if (!(epsilon > 0.0)) throw UsageError("gradient check epsilon must be positive");
  if (kind == ModelKind::LogReg) return check_logreg(epsilon, seed);
  if (is_neural(kind)) return check_neural(kind, epsilon, seed);
  throw UsageError("no gradient to check for the " + std::string(to_string(kind)) + " baseline");
}

}  // namespace argtree

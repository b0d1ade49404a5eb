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

#include "argtree/models/optimizer.hpp"

#include <cmath>

namespace argtree {

GradientDescent::GradientDescent(const ParamSet& shape, const TrainConfig& config)
    : kind_(config.optimizer), learning_rate_(config.learning_rate) {
  if (kind_ == Optimizer::Adam) {
    m_ = shape.zeros_like();
    v_ = shape.zeros_like();
  }
}

void GradientDescent::step(ParamSet& params, const ParamSet& grad) {
  if (kind_ == Optimizer::Sgd) {
    for (std::size_t i = 0; i < params.count(); ++i) params[i] -= learning_rate_ * grad[i];
    return;
  }
  ++t_;
  const double c1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
  const double c2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
  const double step = learning_rate_ * std::sqrt(c2) / c1;
  for (std::size_t i = 0; i < params.count(); ++i) {
    m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * grad[i];
    v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * grad[i].cwiseProduct(grad[i]);
    params[i].array() -= step * m_[i].array() / (v_[i].array().sqrt() + epsilon_);
  }
}

}  // namespace argtree

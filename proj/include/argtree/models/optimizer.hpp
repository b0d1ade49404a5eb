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

#include "argtree/models/parameters.hpp"
#include "argtree/models/train_config.hpp"

namespace argtree {

// Adam (or plain SGD) over a ParamSet. The gradient passed to step() must
// already include any regularization term.
class GradientDescent {
 public:
  GradientDescent(const ParamSet& shape, const TrainConfig& config);

  void step(ParamSet& params, const ParamSet& grad);

 private:
  Optimizer kind_;
  double learning_rate_;
  double beta1_ = 0.9;
  double beta2_ = 0.999;
  double epsilon_ = 1e-8;
  long long t_ = 0;
  ParamSet m_;
  ParamSet v_;
};

}  // namespace argtree

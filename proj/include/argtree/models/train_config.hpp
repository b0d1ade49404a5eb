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
#include <cstdint>

namespace argtree {

enum class Optimizer { Sgd, Adam };

struct TrainConfig {
  double learning_rate = 0.01;
  double l2 = 1e-4;
  std::size_t batch_size = 64;
  std::size_t max_epochs = 5;
  std::size_t patience = 1;  // epochs without dev improvement before stopping
  std::uint64_t seed = 0;
  Optimizer optimizer = Optimizer::Sgd;

  static TrainConfig logreg_defaults() { return {}; }
  static TrainConfig neural_defaults() {
    TrainConfig c;
    c.learning_rate = 0.001;
    c.optimizer = Optimizer::Adam;
    return c;
  }

  // Throws UsageError when a field is out of range.
  void validate() const;
};

}  // namespace argtree

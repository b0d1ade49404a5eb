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

#include "argtree/models/train_config.hpp"

#include <cmath>

#include "argtree/common/error.hpp"

namespace argtree {

void TrainConfig::validate() const {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) throw UsageError("learning_rate must be positive");
  if (!(l2 >= 0.0) || !std::isfinite(l2)) throw UsageError("l2 must be non-negative");
  if (batch_size == 0) throw UsageError("batch_size must be positive");
  if (max_epochs == 0) throw UsageError("max_epochs must be positive");
  if (patience == 0) throw UsageError("patience must be positive");
}

}  // namespace argtree

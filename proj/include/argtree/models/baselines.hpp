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

#include <span>
#include <string_view>

#include "argtree/pairs/examples.hpp"

namespace argtree {

// Constant predictor over binary labels (1 = positive class).
struct MajorityModel {
  int label = 1;

  int predict() const { return label; }
};

// Most frequent label; ties go to the positive class. Throws DataError on
// an empty training set.
MajorityModel majority_fit(std::span<const int> labels);

// SecondMoreSpecific iff the second claim has at least as many tokens.
SpecificityLabel length_predict(std::string_view first, std::string_view second);

}  // namespace argtree

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

#include "argtree/models/baselines.hpp"

#include "argtree/common/error.hpp"
#include "argtree/corpus/text.hpp"

namespace argtree {

MajorityModel majority_fit(std::span<const int> labels) {
  if (labels.empty()) throw DataError("majority baseline needs at least one training label");
  std::size_t positive = 0;
  for (int y : labels) positive += y == 1;
  MajorityModel model;
  model.label = 2 * positive >= labels.size() ? 1 : 0;
  return model;
}

SpecificityLabel length_predict(std::string_view first, std::string_view second) {
  return tokenize(second).size() >= tokenize(first).size() ? SpecificityLabel::SecondMoreSpecific
                                                           : SpecificityLabel::FirstMoreSpecific;
}

}  // namespace argtree

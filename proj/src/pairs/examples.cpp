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

#include "argtree/pairs/examples.hpp"

#include "argtree/common/error.hpp"

namespace argtree {

std::string_view to_string(Task task) {
  return task == Task::Specificity ? "specificity" : "stance";
}

Task parse_task(std::string_view text) {
  if (text == "specificity") return Task::Specificity;
  if (text == "stance") return Task::Stance;
  throw UsageError("unknown task '" + std::string(text) + "' (expected specificity or stance)");
}

std::string_view to_string(SpecificityLabel label) {
  return label == SpecificityLabel::SecondMoreSpecific ? "second_more_specific" : "first_more_specific";
}

std::string_view to_string(StanceLabel label) {
  return label == StanceLabel::Supports ? "supports" : "opposes";
}

std::optional<SpecificityLabel> parse_specificity_label(std::string_view text) {
  if (text == "second_more_specific") return SpecificityLabel::SecondMoreSpecific;
  if (text == "first_more_specific") return SpecificityLabel::FirstMoreSpecific;
  return std::nullopt;
}

std::optional<StanceLabel> parse_stance_label(std::string_view text) {
  if (text == "supports") return StanceLabel::Supports;
  if (text == "opposes") return StanceLabel::Opposes;
  return std::nullopt;
}

}  // namespace argtree

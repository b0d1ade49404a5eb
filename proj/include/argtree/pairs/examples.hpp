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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argtree/corpus/tree.hpp"

namespace argtree {

enum class Task { Specificity, Stance };

std::string_view to_string(Task task);
// Throws UsageError for anything but "specificity" / "stance".
Task parse_task(std::string_view text);

// The positive class of each task is the first enumerator; it is also the
// tie-break class for the majority and length baselines.
enum class SpecificityLabel { SecondMoreSpecific, FirstMoreSpecific };
enum class StanceLabel { Supports, Opposes };

std::string_view to_string(SpecificityLabel label);
std::string_view to_string(StanceLabel label);
std::optional<SpecificityLabel> parse_specificity_label(std::string_view text);
std::optional<StanceLabel> parse_stance_label(std::string_view text);

// A pair of claims on one argument path, presented in random order. Only the
// two texts and metadata are carried; path information never reaches models.
struct SpecificityExample {
  std::string topic_id;
  ClaimId first_id;
  ClaimId second_id;
  std::string first_text;
  std::string second_text;
  int distance = 0;
  std::optional<bool> same_stance;  // nullopt = "n/a" (one claim is the thesis)
  SpecificityLabel label = SpecificityLabel::SecondMoreSpecific;

  bool operator==(const SpecificityExample&) const = default;
};

// Ancestor A, descendant B and the full path between them.
struct StanceExample {
  std::string topic_id;
  ClaimId a_id;
  ClaimId b_id;
  int distance = 0;
  std::vector<std::string> path_texts;  // A first, B last; size distance + 1
  std::vector<Stance> path_edges;       // size distance
  StanceLabel label = StanceLabel::Supports;

  bool operator==(const StanceExample&) const = default;
};

// Binary view used by models and evaluation: 1 = positive class.
inline int binary_label(SpecificityLabel label) { return label == SpecificityLabel::SecondMoreSpecific ? 1 : 0; }
inline int binary_label(StanceLabel label) { return label == StanceLabel::Supports ? 1 : 0; }

}  // namespace argtree

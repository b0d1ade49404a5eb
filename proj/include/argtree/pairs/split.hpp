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

#include <array>
#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "argtree/corpus/tree.hpp"

namespace argtree {

enum class SplitPart { Train, Dev, Test };

SplitPart parse_split_part(std::string_view text);

struct TopicSplit {
  std::set<std::string> train;
  std::set<std::string> dev;
  std::set<std::string> test;
  std::uint64_t seed = 0;
  std::array<double, 3> ratios{0.6, 0.2, 0.2};

  const std::set<std::string>& part(SplitPart which) const;
  bool operator==(const TopicSplit&) const = default;
};

// Sorts the topic ids, shuffles them with `seed` and assigns contiguous runs:
// train gets round(r0 * n) topics, dev round(r1 * n), test the remainder.
// An empty split borrows a topic from the largest one when the donor stays
// within one topic of its own target, so tiny corpora can keep an empty split.
// Throws UsageError for bad ratios and DataError for duplicate topic ids or
// fewer topics than splits.
TopicSplit split_topics(std::vector<std::string> topic_ids, std::array<double, 3> ratios,
                        std::uint64_t seed);
TopicSplit split_by_topic(const std::vector<ArgumentTree>& corpus, std::array<double, 3> ratios,
                          std::uint64_t seed);

std::string format_split(const TopicSplit& split);
TopicSplit parse_split(const std::string& text);
TopicSplit load_split(const std::filesystem::path& path);

}  // namespace argtree

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

#include "argtree/pairs/split.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "argtree/common/error.hpp"
#include "argtree/common/files.hpp"
#include "argtree/common/rng.hpp"

namespace argtree {

SplitPart parse_split_part(std::string_view text) {
  if (text == "train") return SplitPart::Train;
  if (text == "dev") return SplitPart::Dev;
  if (text == "test") return SplitPart::Test;
  throw UsageError("unknown split part '" + std::string(text) + "' (expected train, dev or test)");
}

const std::set<std::string>& TopicSplit::part(SplitPart which) const {
  switch (which) {
    case SplitPart::Train: return train;
    case SplitPart::Dev: return dev;
    case SplitPart::Test: return test;
  }
  return test;
}

TopicSplit split_topics(std::vector<std::string> topic_ids, std::array<double, 3> ratios,
                        std::uint64_t seed) {
  double total = 0.0;
  for (double r : ratios) {
    if (!(r > 0.0)) throw UsageError("split ratios must be positive");
    total += r;
  }
  if (std::abs(total - 1.0) > 1e-6) throw UsageError("split ratios must sum to 1");

  std::sort(topic_ids.begin(), topic_ids.end());
  if (std::adjacent_find(topic_ids.begin(), topic_ids.end()) != topic_ids.end()) {
    throw DataError("duplicate topic id in corpus");
  }
  const std::size_t n = topic_ids.size();
  if (n < 3) throw DataError("fewer topics (" + std::to_string(n) + ") than splits (3)");

  Rng rng(seed);
  rng.shuffle(topic_ids);

  std::array<std::size_t, 3> sizes{};
  sizes[0] = static_cast<std::size_t>(std::llround(ratios[0] * static_cast<double>(n)));
  sizes[1] = static_cast<std::size_t>(std::llround(ratios[1] * static_cast<double>(n)));
  sizes[0] = std::min(sizes[0], n);
  sizes[1] = std::min(sizes[1], n - sizes[0]);
  sizes[2] = n - sizes[0] - sizes[1];
  // Empty parts borrow a topic, but only from a part that stays within one
  // topic of its target; tiny corpora can therefore leave a part empty.
  for (auto& size : sizes) {
    if (size != 0) continue;
    const auto donor = static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    if (static_cast<double>(sizes[donor]) - 1.0 >= ratios[donor] * static_cast<double>(n) - 1.0) {
      --sizes[donor];
      ++size;
    }
  }

  TopicSplit split;
  split.seed = seed;
  split.ratios = ratios;
  auto it = topic_ids.begin();
  split.train.insert(it, it + static_cast<std::ptrdiff_t>(sizes[0]));
  it += static_cast<std::ptrdiff_t>(sizes[0]);
  split.dev.insert(it, it + static_cast<std::ptrdiff_t>(sizes[1]));
  it += static_cast<std::ptrdiff_t>(sizes[1]);
  split.test.insert(it, topic_ids.end());
  return split;
}

TopicSplit split_by_topic(const std::vector<ArgumentTree>& corpus, std::array<double, 3> ratios,
                          std::uint64_t seed) {
  std::vector<std::string> ids;
  ids.reserve(corpus.size());
  for (const auto& tree : corpus) ids.push_back(tree.topic_id);
  return split_topics(std::move(ids), ratios, seed);
}

std::string format_split(const TopicSplit& split) {
  nlohmann::ordered_json j;
  j["schema"] = "argtree-split/1";
  j["seed"] = split.seed;
  j["ratios"] = split.ratios;
  j["train"] = split.train;
  j["dev"] = split.dev;
  j["test"] = split.test;
  return j.dump(1) + "\n";
}

TopicSplit parse_split(const std::string& text) {
  TopicSplit split;
  try {
    auto j = nlohmann::json::parse(text);
    if (j.at("schema").get<std::string>() != "argtree-split/1") throw DataError("split file: schema-version mismatch");
    split.seed = j.at("seed").get<std::uint64_t>();
    split.ratios = j.at("ratios").get<std::array<double, 3>>();
    split.train = j.at("train").get<std::set<std::string>>();
    split.dev = j.at("dev").get<std::set<std::string>>();
    split.test = j.at("test").get<std::set<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed split file: ") + e.what());
  }
  return split;
}

TopicSplit load_split(const std::filesystem::path& path) {
  return parse_split(read_file(path));
}

}  // namespace argtree

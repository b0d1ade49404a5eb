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

#include "argtree/corpus/stats.hpp"

#include <json.hpp>

#include "argtree/common/error.hpp"
#include "argtree/corpus/text.hpp"

namespace argtree {

std::string size_bucket(std::size_t claims) {
  if (claims <= 10) return "1-10";
  if (claims <= 30) return "11-30";
  if (claims <= 100) return "31-100";
  if (claims <= 300) return "101-300";
  if (claims <= 1000) return "301-1000";
  return "1001+";
}

CorpusStats corpus_stats(const std::vector<ArgumentTree>& corpus) {
  CorpusStats stats;
  std::size_t tokens = 0;
  std::size_t depth_sum = 0;
  std::map<std::size_t, std::size_t> sentence_counts;
  for (const auto& tree : corpus) {
    auto violations = validate_tree(tree);
    if (!violations.empty()) {
      const auto& v = violations.front();
      throw DataError("invalid tree '" + tree.topic_id + "': " + v.rule + " at '" + v.node_id + "'");
    }
    ++stats.topic_count;
    ++stats.size_histogram[size_bucket(tree.size())];
    std::size_t deepest = 0;
    // Breadth-first so depths come for free.
    std::vector<std::pair<const ClaimNode*, std::size_t>> frontier{{&tree.node(tree.root_id), 0}};
    while (!frontier.empty()) {
      auto [node, depth] = frontier.back();
      frontier.pop_back();
      ++stats.claim_count;
      ++stats.depth_histogram[depth];
      deepest = std::max(deepest, depth);
      if (node->stance) ++(*node->stance == Stance::Pro ? stats.pro_count : stats.con_count);
      tokens += tokenize(node->text).size();
      ++sentence_counts[split_sentences(node->text).size()];
      for (const auto& child : node->children) frontier.emplace_back(&tree.node(child), depth + 1);
    }
    depth_sum += deepest;
  }
  if (stats.topic_count > 0) {
    stats.mean_claims_per_tree = static_cast<double>(stats.claim_count) / stats.topic_count;
    stats.mean_depth = static_cast<double>(depth_sum) / stats.topic_count;
  }
  if (stats.claim_count > 0) {
    stats.mean_tokens_per_claim = static_cast<double>(tokens) / stats.claim_count;
    for (const auto& [count, claims] : sentence_counts) {
      stats.sentence_count_distribution[count] = static_cast<double>(claims) / stats.claim_count;
    }
  }
  return stats;
}

std::string stats_to_json(const CorpusStats& stats, int indent) {
  nlohmann::ordered_json j;
  j["topic_count"] = stats.topic_count;
  j["claim_count"] = stats.claim_count;
  j["pro_count"] = stats.pro_count;
  j["con_count"] = stats.con_count;
  j["mean_claims_per_tree"] = stats.mean_claims_per_tree;
  j["mean_depth"] = stats.mean_depth;
  j["mean_tokens_per_claim"] = stats.mean_tokens_per_claim;
  auto& depth = j["depth_histogram"] = nlohmann::ordered_json::object();
  for (const auto& [d, n] : stats.depth_histogram) depth[std::to_string(d)] = n;
  auto& sizes = j["size_histogram"] = nlohmann::ordered_json::object();
  for (const char* bucket : {"1-10", "11-30", "31-100", "101-300", "301-1000", "1001+"}) {
    auto it = stats.size_histogram.find(bucket);
    if (it != stats.size_histogram.end()) sizes[bucket] = it->second;
  }
  auto& sentences = j["sentence_count_distribution"] = nlohmann::ordered_json::object();
  for (const auto& [count, fraction] : stats.sentence_count_distribution) {
    sentences[std::to_string(count)] = fraction;
  }
  return j.dump(indent);
}

}  // namespace argtree

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

#include "argtree/pairs/derive.hpp"

#include <algorithm>

#include "argtree/common/error.hpp"
#include "argtree/common/rng.hpp"

namespace argtree {

StanceLabel derive_stance_label(std::span<const Stance> path_edges) {
  if (path_edges.empty()) throw DataError("cannot derive a stance from an empty path");
  const auto cons = std::count(path_edges.begin(), path_edges.end(), Stance::Con);
  return cons % 2 == 0 ? StanceLabel::Supports : StanceLabel::Opposes;
}

namespace {

void require_valid(const ArgumentTree& tree) {
  auto violations = validate_tree(tree);
  if (!violations.empty()) {
    throw DataError("invalid tree '" + tree.topic_id + "': " + violations.front().rule + " at '" +
                    violations.front().node_id + "'");
  }
}

bool ancestor_goes_first(std::uint64_t seed, const std::string& topic, const ClaimId& a, const ClaimId& b) {
  std::uint64_t h = hash_string(topic, seed);
  h = hash_string(a, h);
  h = hash_string(b, h);
  return (h >> 63) != 0;
}

}  // namespace

std::vector<SpecificityExample> derive_specificity_examples(const std::vector<ArgumentTree>& corpus,
                                                            std::size_t max_distance,
                                                            std::uint64_t seed) {
  std::vector<SpecificityExample> out;
  for (const auto& tree : corpus) {
    require_valid(tree);
    visit_ancestor_paths(tree, max_distance, [&](std::span<const ClaimNode* const> path) {
      const ClaimNode& ancestor = *path.front();
      const ClaimNode& descendant = *path.back();
      SpecificityExample ex;
      ex.topic_id = tree.topic_id;
      ex.distance = static_cast<int>(path.size() - 1);
      if (ancestor.stance && descendant.stance) ex.same_stance = *ancestor.stance == *descendant.stance;
      const ClaimNode* first = &descendant;
      const ClaimNode* second = &ancestor;
      ex.label = SpecificityLabel::FirstMoreSpecific;
      if (ancestor_goes_first(seed, tree.topic_id, ancestor.id, descendant.id)) {
        std::swap(first, second);
        ex.label = SpecificityLabel::SecondMoreSpecific;
      }
      ex.first_id = first->id;
      ex.second_id = second->id;
      ex.first_text = first->text;
      ex.second_text = second->text;
      out.push_back(std::move(ex));
    });
  }
  return out;
}

std::vector<StanceExample> derive_stance_examples(const std::vector<ArgumentTree>& corpus,
                                                  std::size_t max_distance) {
  std::vector<StanceExample> out;
  for (const auto& tree : corpus) {
    require_valid(tree);
    visit_ancestor_paths(tree, max_distance, [&](std::span<const ClaimNode* const> path) {
      StanceExample ex;
      ex.topic_id = tree.topic_id;
      ex.a_id = path.front()->id;
      ex.b_id = path.back()->id;
      ex.distance = static_cast<int>(path.size() - 1);
      for (const ClaimNode* node : path) ex.path_texts.push_back(node->text);
      for (std::size_t i = 1; i < path.size(); ++i) ex.path_edges.push_back(*path[i]->stance);
      ex.label = derive_stance_label(ex.path_edges);
      out.push_back(std::move(ex));
    });
  }
  return out;
}

}  // namespace argtree

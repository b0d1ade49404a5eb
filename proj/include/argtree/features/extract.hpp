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

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "argtree/features/feature_vector.hpp"
#include "argtree/features/resources.hpp"
#include "argtree/features/vocabulary.hpp"
#include "argtree/pairs/examples.hpp"

namespace argtree {

// Closed personal-pronoun list used by the surface features.
const std::set<std::string>& personal_pronouns();

// count(second) - count(first) per vocabulary token; OOV tokens are ignored
// and zero entries are not stored.
FeatureVector bow_pair_features(const Vocabulary& vocab, std::string_view first, std::string_view second);

// Per claim: token length, personal-pronoun count, polarity strength (sum of
// |polarity|); then the three differences second - first.
FeatureVector specificity_surface_features(const Lexicon& lexicon, std::string_view first,
                                           std::string_view second);

struct StanceResources {
  const Vocabulary* vocab = nullptr;
  const Lexicon* lexicon = nullptr;
  const EmbeddingTable* embeddings = nullptr;  // optional
  std::set<std::string> stop_list;             // excluded from word match

  // Stop list = the `stop_words` most frequent vocabulary tokens.
  static StanceResources from(const Vocabulary& vocab, const Lexicon& lexicon,
                              const EmbeddingTable* embeddings, std::size_t stop_words = 50);
};

// BOW difference (b - a), word match, sentiment match, embedding similarity
// (only when embeddings are loaded) and subjectivity counts.
FeatureVector stance_pair_features(const StanceResources& res, std::string_view a, std::string_view b);

// B (last text) against the space-joined concatenation of every other claim
// on the path, in path order. Throws DataError for paths shorter than 2.
FeatureVector path_concat_features(const StanceResources& res, const std::vector<std::string>& path_texts);

enum class FeatureSet { Bow, Surface, All };
FeatureSet parse_feature_set(std::string_view text);
std::string_view to_string(FeatureSet set);

FeatureVector specificity_features(const Vocabulary& vocab, const Lexicon& lexicon, FeatureSet set,
                                   const SpecificityExample& example);
FeatureVector stance_features(const StanceResources& res, FeatureSet set, bool use_path,
                              const StanceExample& example);

}  // namespace argtree

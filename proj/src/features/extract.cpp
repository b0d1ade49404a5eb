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

#include "argtree/features/extract.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <map>

#include "argtree/common/error.hpp"
#include "argtree/corpus/text.hpp"

namespace argtree {

const std::set<std::string>& personal_pronouns() {
  static const std::set<std::string> pronouns{
      "i",    "me",  "my",   "mine", "we",   "us",   "our",  "ours",   "you",  "your", "yours", "he",
      "him",  "his", "she",  "her",  "hers", "they", "them", "their", "theirs", "it", "its"};
  return pronouns;
}

namespace {

struct TextSummary {
  std::vector<std::string> tokens;
  double pronouns = 0;
  double polarity_strength = 0;
  double polarity_sum = 0;
  double strong = 0;
  double weak = 0;
};

TextSummary summarize(const Lexicon* lexicon, std::string_view text) {
  TextSummary s;
  s.tokens = tokenize(text);
  for (const auto& token : s.tokens) {
    if (personal_pronouns().count(token)) ++s.pronouns;
    if (!lexicon) continue;
    if (const auto* entry = lexicon->find(token)) {
      s.polarity_strength += std::abs(entry->polarity);
      s.polarity_sum += entry->polarity;
      if (entry->subjectivity == Subjectivity::Strong) ++s.strong;
      if (entry->subjectivity == Subjectivity::Weak) ++s.weak;
    }
  }
  return s;
}

int sign(double v) { return (v > 0) - (v < 0); }

void add_bow_difference(const Vocabulary& vocab, const std::vector<std::string>& first,
                        const std::vector<std::string>& second, FeatureVector& out) {
  std::map<std::size_t, double> diff;
  for (const auto& t : second) {
    if (auto i = vocab.index(t)) diff[*i] += 1.0;
  }
  for (const auto& t : first) {
    if (auto i = vocab.index(t)) diff[*i] -= 1.0;
  }
  for (const auto& [i, v] : diff) {
    if (v != 0.0) out.sparse[i] = v;
  }
}

}  // namespace

FeatureVector bow_pair_features(const Vocabulary& vocab, std::string_view first, std::string_view second) {
  FeatureVector out;
  add_bow_difference(vocab, tokenize(first), tokenize(second), out);
  return out;
}

FeatureVector specificity_surface_features(const Lexicon& lexicon, std::string_view first,
                                           std::string_view second) {
  const auto a = summarize(&lexicon, first);
  const auto b = summarize(&lexicon, second);
  FeatureVector out;
  out.add_dense("len_first", static_cast<double>(a.tokens.size()));
  out.add_dense("pron_first", a.pronouns);
  out.add_dense("pol_first", a.polarity_strength);
  out.add_dense("len_second", static_cast<double>(b.tokens.size()));
  out.add_dense("pron_second", b.pronouns);
  out.add_dense("pol_second", b.polarity_strength);
  out.add_dense("len_diff", static_cast<double>(b.tokens.size()) - static_cast<double>(a.tokens.size()));
  out.add_dense("pron_diff", b.pronouns - a.pronouns);
  out.add_dense("pol_diff", b.polarity_strength - a.polarity_strength);
  return out;
}

StanceResources StanceResources::from(const Vocabulary& vocab, const Lexicon& lexicon,
                                      const EmbeddingTable* embeddings, std::size_t stop_words) {
  StanceResources res;
  res.vocab = &vocab;
  res.lexicon = &lexicon;
  res.embeddings = embeddings;
  for (std::size_t i = 0; i < std::min(stop_words, vocab.size()); ++i) res.stop_list.insert(vocab.token(i));
  return res;
}

FeatureVector stance_pair_features(const StanceResources& res, std::string_view a_text, std::string_view b_text) {
  const auto a = summarize(res.lexicon, a_text);
  const auto b = summarize(res.lexicon, b_text);
  FeatureVector out;
  add_bow_difference(*res.vocab, a.tokens, b.tokens, out);

  std::set<std::string> content_a, content_b;
  for (const auto& t : a.tokens) {
    if (!res.stop_list.count(t)) content_a.insert(t);
  }
  for (const auto& t : b.tokens) {
    if (!res.stop_list.count(t)) content_b.insert(t);
  }
  std::vector<std::string> common;
  std::set_intersection(content_a.begin(), content_a.end(), content_b.begin(), content_b.end(),
                        std::back_inserter(common));
  const double union_size = static_cast<double>(content_a.size() + content_b.size() - common.size());
  out.add_dense("match_count", static_cast<double>(common.size()));
  out.add_dense("match_jaccard", union_size > 0 ? static_cast<double>(common.size()) / union_size : 0.0);

  out.add_dense("sentiment_match", sign(a.polarity_sum) == sign(b.polarity_sum) ? 1.0 : 0.0);
  out.add_dense("sentiment_a", a.polarity_sum);
  out.add_dense("sentiment_b", b.polarity_sum);

  if (res.embeddings) {
    auto ma = res.embeddings->mean(a.tokens);
    auto mb = res.embeddings->mean(b.tokens);
    out.add_dense("embedding_cosine", ma && mb ? cosine(*ma, *mb) : 0.0);
  }

  out.add_dense("strong_a", a.strong);
  out.add_dense("weak_a", a.weak);
  out.add_dense("strong_b", b.strong);
  out.add_dense("weak_b", b.weak);
  return out;
}

FeatureVector path_concat_features(const StanceResources& res, const std::vector<std::string>& path_texts) {
  if (path_texts.size() < 2) throw DataError("path needs at least 2 claims for path features");
  std::string context = path_texts.front();
  for (std::size_t i = 1; i + 1 < path_texts.size(); ++i) context += " " + path_texts[i];
  return stance_pair_features(res, context, path_texts.back());
}

FeatureSet parse_feature_set(std::string_view text) {
  if (text == "bow") return FeatureSet::Bow;
  if (text == "surface") return FeatureSet::Surface;
  if (text == "all") return FeatureSet::All;
  throw UsageError("unknown feature set '" + std::string(text) + "' (expected bow, surface or all)");
}

std::string_view to_string(FeatureSet set) {
  switch (set) {
    case FeatureSet::Bow: return "bow";
    case FeatureSet::Surface: return "surface";
    case FeatureSet::All: return "all";
  }
  return "all";
}

FeatureVector specificity_features(const Vocabulary& vocab, const Lexicon& lexicon, FeatureSet set,
                                   const SpecificityExample& ex) {
  FeatureVector out;
  if (set != FeatureSet::Surface) out = bow_pair_features(vocab, ex.first_text, ex.second_text);
  if (set != FeatureSet::Bow) out.dense = specificity_surface_features(lexicon, ex.first_text, ex.second_text).dense;
  return out;
}

FeatureVector stance_features(const StanceResources& res, FeatureSet set, bool use_path, const StanceExample& ex) {
  FeatureVector out = use_path ? path_concat_features(res, ex.path_texts)
                               : stance_pair_features(res, ex.path_texts.front(), ex.path_texts.back());
  if (set == FeatureSet::Bow) out.dense.clear();
  if (set == FeatureSet::Surface) out.sparse.clear();
  return out;
}

}  // namespace argtree

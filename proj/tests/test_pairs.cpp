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

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "argtree/common/error.hpp"
#include "argtree/corpus/corpus_io.hpp"
#include "argtree/pairs/derive.hpp"
#include "argtree/pairs/pairs_io.hpp"
#include "argtree/pairs/split.hpp"
#include "argtree/synth/oracle.hpp"
#include "argtree/synth/synth.hpp"
#include "test_util.hpp"

using namespace argtree;
using argtree::testing::chain;
using argtree::testing::data_path;
using argtree::testing::random_tree;

namespace {

std::vector<ArgumentTree> fig1() { return load_corpus(data_path("fig1.jsonl")); }

std::vector<std::string> topic_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("topic-" + std::to_string(i));
  return out;
}

}  // namespace

TEST(StanceLabel, ParityRule) {
  const std::vector<Stance> con{Stance::Con};
  const std::vector<Stance> con_con{Stance::Con, Stance::Con};
  const std::vector<Stance> pcp{Stance::Pro, Stance::Con, Stance::Pro};
  EXPECT_EQ(derive_stance_label(con), StanceLabel::Opposes);
  EXPECT_EQ(derive_stance_label(con_con), StanceLabel::Supports);
  EXPECT_EQ(derive_stance_label(pcp), StanceLabel::Opposes);
  EXPECT_THROW(derive_stance_label(std::vector<Stance>{}), DataError);
}

TEST(StanceExamples, Fig1IndirectOpposition) {
  auto ex = derive_stance_examples(fig1(), 4);
  const StanceExample* found = nullptr;
  for (const auto& e : ex) {
    if (e.a_id == "1.2" && e.b_id == "1.2.1.1") found = &e;
  }
  ASSERT_NE(found, nullptr);
  EXPECT_EQ(found->distance, 2);
  EXPECT_EQ(found->label, StanceLabel::Opposes);
  EXPECT_EQ(found->path_texts.front(), "The capacity of harm is greater when magic is involved.");
  EXPECT_EQ(found->path_texts.size(), 3u);
}

TEST(StanceExamples, DistanceOneLabelsAreEdges) {
  auto t = random_tree(4, 120, 6);
  for (const auto& e : derive_stance_examples({t}, 4)) {
    if (e.distance != 1) continue;
    const bool pro = *t.node(e.b_id).stance == Stance::Pro;
    EXPECT_EQ(e.label, pro ? StanceLabel::Supports : StanceLabel::Opposes);
  }
}

TEST(StanceExamples, AgreeWithRecursiveOracle) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 100; seed < 300; ++seed) {
    auto t = random_tree(seed, 2 + seed % 299, 7);
    for (const auto& e : derive_stance_examples({t}, 4)) {
      ASSERT_EQ(e.label, stance_oracle(t, e.a_id, e.b_id)) << e.topic_id << " " << e.a_id << " " << e.b_id;
      ++checked;
    }
  }
  EXPECT_GT(checked, 10000u);
}

TEST(SpecificityExamples, ChainCount) {
  auto t = chain({Stance::Pro, Stance::Con, Stance::Con});
  EXPECT_EQ(derive_specificity_examples({t}, 5, 1).size(), 6u);
}

TEST(SpecificityExamples, DeeperClaimIsMoreSpecific) {
  std::vector<ArgumentTree> corpus;
  for (std::uint64_t s = 1; s <= 30; ++s) corpus.push_back(random_tree(s, 100, 7, "t" + std::to_string(s)));
  std::size_t second = 0, total = 0;
  for (const auto& e : derive_specificity_examples(corpus, 5, 42)) {
    const auto& t = corpus[static_cast<std::size_t>(std::stoi(e.topic_id.substr(1))) - 1];
    const auto d1 = node_depth(t, e.first_id), d2 = node_depth(t, e.second_id);
    if (e.label == SpecificityLabel::SecondMoreSpecific) {
      EXPECT_GT(d2, d1);
      ++second;
    } else {
      EXPECT_GT(d1, d2);
    }
    EXPECT_EQ(static_cast<std::size_t>(e.distance), d1 > d2 ? d1 - d2 : d2 - d1);
    EXPECT_EQ(e.first_text, t.node(e.first_id).text);
    ++total;
  }
  EXPECT_NEAR(static_cast<double>(second) / static_cast<double>(total), 0.5, 0.03);
}

TEST(SpecificityExamples, SameStanceFlag) {
  auto ex = derive_specificity_examples(fig1(), 5, 7);
  for (const auto& e : ex) {
    if (e.first_id == "1" || e.second_id == "1") {
      EXPECT_FALSE(e.same_stance.has_value());
    } else {
      ASSERT_TRUE(e.same_stance.has_value());
    }
  }
  // 1.2 (Con) with 1.2.2 (Con) share a stance; 1.2 with 1.2.1 (Pro) do not.
  for (const auto& e : ex) {
    std::set<ClaimId> ids{e.first_id, e.second_id};
    if (ids == std::set<ClaimId>{"1.2", "1.2.2"}) {
      EXPECT_EQ(e.same_stance, true);
    }
    if (ids == std::set<ClaimId>{"1.2", "1.2.1"}) {
      EXPECT_EQ(e.same_stance, false);
    }
  }
}

TEST(SpecificityExamples, CountEqualsBruteForceAndIsSeeded) {
  std::vector<ArgumentTree> corpus;
  for (std::uint64_t s = 1; s <= 10; ++s) corpus.push_back(random_tree(s, 80, 8, "t" + std::to_string(s)));
  std::size_t brute = 0;
  for (const auto& t : corpus) brute += ancestor_descendant_pairs(t, 5).size();
  auto a = derive_specificity_examples(corpus, 5, 3);
  EXPECT_EQ(a.size(), brute);
  EXPECT_EQ(a, derive_specificity_examples(corpus, 5, 3));
  EXPECT_NE(a, derive_specificity_examples(corpus, 5, 4));
}

TEST(PairsIo, RoundTripBothTasks) {
  auto spec = derive_specificity_examples(fig1(), 5, 1);
  std::istringstream s1(format_pairs(spec));
  auto back = parse_pairs(s1);
  EXPECT_EQ(back.task, Task::Specificity);
  EXPECT_EQ(back.specificity, spec);

  auto stance = derive_stance_examples(fig1(), 4);
  std::istringstream s2(format_pairs(stance));
  auto back2 = parse_pairs(s2);
  EXPECT_EQ(back2.task, Task::Stance);
  EXPECT_EQ(back2.stance, stance);
}

TEST(PairsIo, MixedTasksRejected) {
  auto text = format_pairs(derive_specificity_examples(fig1(), 5, 1)) + format_pairs(derive_stance_examples(fig1(), 4));
  std::istringstream in(text);
  EXPECT_THROW(parse_pairs(in), DataError);
  std::istringstream empty("");
  EXPECT_EQ(parse_pairs(empty, Task::Stance).task, Task::Stance);
}

TEST(Split, SmallRatios) {
  auto s = split_topics(topic_names(10), {0.6, 0.2, 0.2}, 1);
  EXPECT_EQ(s.train.size(), 6u);
  EXPECT_EQ(s.dev.size(), 2u);
  EXPECT_EQ(s.test.size(), 2u);
  EXPECT_EQ(s, split_topics(topic_names(10), {0.6, 0.2, 0.2}, 1));
}

TEST(Split, KialoSizedCorpus) {
  auto s = split_topics(topic_names(741), {0.6, 0.2, 0.2}, 5);
  EXPECT_EQ(s.train.size(), 445u);
  EXPECT_EQ(s.dev.size(), 148u);
  EXPECT_EQ(s.test.size(), 148u);
}

TEST(Split, DisjointCoveringAndSeedDependent) {
  for (std::size_t n : {3u, 7u, 50u, 333u}) {
    auto names = topic_names(n);
    auto a = split_topics(names, {0.6, 0.2, 0.2}, 11);
    auto b = split_topics(names, {0.6, 0.2, 0.2}, 12);
    std::set<std::string> all;
    for (const auto* part : {&a.train, &a.dev, &a.test}) {
      EXPECT_FALSE(part->empty());
      for (const auto& t : *part) EXPECT_TRUE(all.insert(t).second) << "overlap on " << t;
    }
    EXPECT_EQ(all.size(), n);
    EXPECT_EQ(a.train.size(), b.train.size());
    EXPECT_EQ(a.dev.size(), b.dev.size());
    if (n >= 50) {
      EXPECT_NE(a.train, b.train);
    }
    EXPECT_NEAR(static_cast<double>(a.train.size()), 0.6 * static_cast<double>(n), 1.0);
  }
}

TEST(Split, TinyCorporaStayWithinOneTopicOfTheRatios) {
  for (std::size_t n = 3; n <= 40; ++n) {
    for (const auto& r : {std::array<double, 3>{0.8, 0.1, 0.1}, std::array<double, 3>{0.6, 0.2, 0.2},
                          std::array<double, 3>{0.34, 0.33, 0.33}}) {
      auto s = split_topics(topic_names(n), r, 3);
      const std::array<std::size_t, 3> sizes{s.train.size(), s.dev.size(), s.test.size()};
      for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_LE(std::abs(static_cast<double>(sizes[i]) - r[i] * static_cast<double>(n)), 1.0) << n << " part " << i;
      }
    }
  }
  auto s = split_topics(topic_names(3), {0.8, 0.1, 0.1}, 1);
  EXPECT_EQ(s.train.size(), 2u);
}

TEST(Split, Errors) {
  EXPECT_THROW(split_topics(topic_names(10), {0.5, 0.2, 0.2}, 1), UsageError);
  EXPECT_THROW(split_topics(topic_names(10), {1.0, 0.0, 0.0}, 1), UsageError);
  EXPECT_THROW(split_topics(topic_names(2), {0.6, 0.2, 0.2}, 1), DataError);
  EXPECT_THROW(split_topics({"a", "a", "b", "c"}, {0.6, 0.2, 0.2}, 1), DataError);
}

TEST(Split, FileRoundTrip) {
  auto s = split_topics(topic_names(20), {0.5, 0.25, 0.25}, 9);
  EXPECT_EQ(parse_split(format_split(s)), s);
  EXPECT_THROW(parse_split("{}"), DataError);
}

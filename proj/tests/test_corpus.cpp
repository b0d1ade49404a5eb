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

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "argtree/common/error.hpp"
#include "argtree/common/files.hpp"
#include "argtree/corpus/corpus_io.hpp"
#include "argtree/corpus/outline.hpp"
#include "argtree/corpus/stats.hpp"
#include "argtree/corpus/text.hpp"
#include "argtree/corpus/tree.hpp"
#include "argtree/synth/synth.hpp"
#include "test_util.hpp"

using namespace argtree;
using argtree::testing::chain;
using argtree::testing::data_path;
using argtree::testing::random_tree;
using ::testing::HasSubstr;

namespace {

ArgumentTree fig1() {
  auto trees = load_corpus(data_path("fig1.jsonl"));
  EXPECT_EQ(trees.size(), 1u);
  return trees.front();
}

const char* kHarm = "1.2";
const char* kDefense = "1.2.2";
const char* kCursesIllegal = "1.2.1.1";

bool is_ancestor(const ArgumentTree& t, const ClaimId& a, const ClaimId& b, std::size_t* distance) {
  std::size_t d = 0;
  for (auto cur = t.node(b).parent; cur; cur = t.node(*cur).parent) {
    ++d;
    if (*cur == a) {
      *distance = d;
      return true;
    }
  }
  return false;
}

}  // namespace

TEST(Tree, ThesisOnlyIsValid) {
  TreeBuilder b("t", "r", "A thesis.");
  EXPECT_TRUE(validate_tree(b.tree()).empty());
}

TEST(Tree, DanglingParentIsOneViolation) {
  auto t = chain({Stance::Pro});
  ClaimNode orphan{"x", "orphan claim", ClaimId("missing"), Stance::Con, {}};
  t.nodes.emplace("x", orphan);
  auto v = validate_tree(t);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rule, "dangling parent");
  EXPECT_EQ(v[0].node_id, "x");
}

TEST(Tree, CycleAndBadLinksReported) {
  auto t = chain({Stance::Pro, Stance::Con});
  t.nodes["c1"].parent = "c2";
  t.nodes["c2"].children.push_back("c1");
  EXPECT_FALSE(validate_tree(t).empty());

  auto u = chain({Stance::Pro});
  u.nodes["c1"].stance.reset();
  EXPECT_FALSE(validate_tree(u).empty());
}

TEST(Tree, BuilderRejectsUnknownParentAndDuplicates) {
  TreeBuilder b("t", "r", "thesis");
  EXPECT_THROW(b.add("nope", "a", Stance::Pro, "x"), DataError);
  b.add("r", "a", Stance::Pro, "x");
  EXPECT_THROW(b.add("r", "a", Stance::Con, "y"), DataError);
}

TEST(Tree, Fig1Depths) {
  auto t = fig1();
  EXPECT_EQ(node_depth(t, "1"), 0u);
  EXPECT_EQ(node_depth(t, kHarm), 1u);
  EXPECT_EQ(node_depth(t, kDefense), 2u);
  EXPECT_EQ(node_depth(t, kCursesIllegal), 3u);
  EXPECT_THROW(node_depth(t, "9.9"), DataError);
}

TEST(Tree, Fig1DefensePathIsDoubleCon) {
  auto t = fig1();
  auto p = path_between(t, "1", kDefense);
  EXPECT_EQ(p.nodes, (std::vector<ClaimId>{"1", kHarm, kDefense}));
  EXPECT_EQ(p.edges, (std::vector<Stance>{Stance::Con, Stance::Con}));
  EXPECT_EQ(p.distance(), 2u);
}

TEST(Tree, PathBetweenErrors) {
  auto t = fig1();
  try {
    path_between(t, kHarm, kHarm);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_THAT(e.what(), HasSubstr("not on one path"));
  }
  EXPECT_THROW(path_between(t, kDefense, kHarm), DataError);
  EXPECT_THROW(path_between(t, "1.1", kDefense), DataError);
  auto edge = path_between(t, kHarm, kDefense);
  EXPECT_EQ(edge.nodes.size(), 2u);
  EXPECT_EQ(edge.edges.size(), 1u);
}

TEST(Tree, ChainPairCounts) {
  auto t = chain({Stance::Pro, Stance::Con, Stance::Pro});
  EXPECT_EQ(ancestor_descendant_pairs(t, 5).size(), 6u);
  EXPECT_EQ(ancestor_descendant_pairs(t, 1).size(), 3u);
  EXPECT_EQ(tree_depth(t), 3u);
}

TEST(Tree, PairsMatchBruteForce) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto t = random_tree(seed, seed == 1 ? 200 : 10 + seed * 13, 7);
    ASSERT_TRUE(validate_tree(t).empty());
    for (std::size_t cap : {1u, 3u, 5u}) {
      std::set<std::tuple<ClaimId, ClaimId, std::size_t>> brute;
      for (const auto& [a, na] : t.nodes) {
        for (const auto& [b, nb] : t.nodes) {
          std::size_t d = 0;
          if (a != b && is_ancestor(t, a, b, &d) && d <= cap) brute.emplace(a, b, d);
        }
      }
      auto got = ancestor_descendant_pairs(t, cap);
      std::set<std::tuple<ClaimId, ClaimId, std::size_t>> mine;
      for (const auto& p : got) mine.emplace(p.ancestor, p.descendant, p.distance);
      EXPECT_EQ(mine.size(), got.size());
      EXPECT_EQ(mine, brute);
    }
  }
}

TEST(Tree, DepthIncreasesByOneAlongEdges) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto t = random_tree(seed, 150, 7);
    for (const auto& [id, n] : t.nodes) {
      if (n.parent) {
        EXPECT_EQ(node_depth(t, id), node_depth(t, *n.parent) + 1);
      }
    }
  }
}

TEST(Tree, PairsOrderPreorderThenDistance) {
  auto t = fig1();
  auto pairs = ancestor_descendant_pairs(t, 5);
  auto order = preorder(t);
  std::size_t last_pos = 0, last_d = 0;
  for (const auto& p : pairs) {
    auto pos = static_cast<std::size_t>(std::find(order.begin(), order.end(), p.descendant) - order.begin());
    if (pos == last_pos) {
      EXPECT_GT(p.distance, last_d);
    } else {
      EXPECT_GT(pos, last_pos);
    }
    last_pos = pos;
    last_d = p.distance;
  }
}

TEST(CorpusIo, EmptyFileIsEmptyCorpus) {
  std::istringstream in("");
  EXPECT_TRUE(parse_corpus(in).empty());
}

TEST(CorpusIo, Fig1RoundTrip) {
  auto t = fig1();
  EXPECT_EQ(t.size(), 6u);
  EXPECT_EQ(t.root_id, "1");
  EXPECT_EQ(t.tags, (std::set<std::string>{"fiction"}));
  EXPECT_EQ(parse_tree(format_tree(t)), t);
  EXPECT_EQ(format_tree(t) + "\n", read_file(data_path("fig1.jsonl")));
}

TEST(CorpusIo, RoundTripOnGeneratedTrees) {
  SynthConfig c;
  c.topic_count = 1000;
  c.depth_max = 4;
  c.seed = 3;
  auto corpus = generate_corpus(c);
  std::istringstream in(format_corpus(corpus.trees));
  auto back = parse_corpus(in);
  ASSERT_EQ(back.size(), corpus.trees.size());
  EXPECT_TRUE(back == corpus.trees);
}

TEST(CorpusIo, BadStanceNamesField) {
  const std::string line =
      R"({"schema":"argtree/1","topic_id":"t","tags":[],"claims":[{"id":"r","parent":null,"stance":null,"text":"x"},)"
      R"({"id":"a","parent":"r","stance":"Maybe","text":"y"}]})";
  try {
    parse_tree(line, 4);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_THAT(e.what(), HasSubstr("stance"));
    EXPECT_THAT(e.what(), HasSubstr("line 4"));
  }
}

TEST(CorpusIo, SchemaAndDuplicateErrors) {
  EXPECT_THROW(parse_tree(R"({"schema":"argtree/2","topic_id":"t","tags":[],"claims":[]})"), DataError);
  EXPECT_THROW(parse_tree("{not json"), DataError);
  EXPECT_THROW(parse_tree(R"({"schema":"argtree/1","topic_id":"t","tags":[],"claims":[)"
                          R"({"id":"r","parent":null,"stance":null,"text":"x"},)"
                          R"({"id":"r","parent":null,"stance":null,"text":"x"}]})"),
               DataError);
  try {
    load_corpus("/nonexistent/corpus.jsonl");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_THAT(e.what(), HasSubstr("file not found"));
  }
}

TEST(Outline, ThreeNodeGrammar) {
  std::istringstream in("1. T\n1.1. Con: A\n1.1.1. Pro: B\n");
  auto t = import_outline(in, "topic");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_TRUE(validate_tree(t).empty());
  EXPECT_EQ(t.node("1.1").text, "A");
  EXPECT_EQ(node_depth(t, "1.1"), 1u);
  EXPECT_EQ(*t.node("1.1").stance, Stance::Con);
  EXPECT_EQ(node_depth(t, "1.1.1"), 2u);
  EXPECT_EQ(*t.node("1.1.1").stance, Stance::Pro);
}

TEST(Outline, GapsKeepFileOrder) {
  std::istringstream in("1. T\n1.2. Con: A\n1.1. Pro: B\n\n1.7. Pro: C\n");
  auto t = import_outline(in, "topic");
  EXPECT_EQ(t.node("1").children, (std::vector<ClaimId>{"1.2", "1.1", "1.7"}));
}

TEST(Outline, Errors) {
  auto fails = [](const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    try {
      import_outline(in, "t");
      ADD_FAILURE() << "no error for: " << text;
    } catch (const DataError& e) {
      EXPECT_THAT(e.what(), HasSubstr(needle));
    }
  };
  fails("1.1. Pro: A\n", "orphan");
  fails("1. T\n1.1.1. Pro: A\n", "orphan");
  fails("1. T\n1.1. Maybe: A\n", "stance keyword");
  fails("1. T\n1.1. Pro: A\n1.1. Con: B\n", "duplicate");
  fails("1. T\nnot numbered\n", "line 2");
}

TEST(Outline, Fig1OutlineMatchesCorpusFixture) {
  std::istringstream in(read_file(data_path("fig1_outline.txt")));
  auto t = import_outline(in, "harry-potter");
  EXPECT_EQ(t.nodes, fig1().nodes);
}

TEST(Text, Tokenize) {
  EXPECT_EQ(tokenize("Magic is great!"), (std::vector<std::string>{"magic", "is", "great", "!"}));
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_TRUE(split_sentences("").empty());
  // Hand-tokenized claim.
  EXPECT_EQ(tokenize("Harry's wand (holly, 11 inches) isn't unique; Voldemort's wand shares its core!"),
            (std::vector<std::string>{"harry", "'", "s", "wand", "(", "holly", ",", "11", "inches", ")", "isn", "'",
                                      "t", "unique", ";", "voldemort", "'", "s", "wand", "shares", "its", "core",
                                      "!"}));
  EXPECT_EQ(tokenize("Déjà vu"), (std::vector<std::string>{"déjà", "vu"}));
}

TEST(Text, SplitSentences) {
  EXPECT_EQ(split_sentences("Magic is great. It helps! really? No."),
            (std::vector<std::string>{"Magic is great.", "It helps! really?", "No."}));
  EXPECT_EQ(split_sentences("  One sentence only  "), (std::vector<std::string>{"One sentence only"}));
}

TEST(Stats, SingleNodeTree) {
  TreeBuilder b("t", "r", "Only a thesis.");
  auto s = corpus_stats({b.tree()});
  EXPECT_EQ(s.topic_count, 1u);
  EXPECT_EQ(s.claim_count, 1u);
  EXPECT_EQ(s.pro_count, 0u);
  EXPECT_EQ(s.con_count, 0u);
  EXPECT_EQ(s.size_histogram.at("1-10"), 1u);
}

TEST(Stats, Fig1Counts) {
  auto s = corpus_stats({fig1()});
  EXPECT_EQ(s.claim_count, 6u);
  EXPECT_EQ(s.pro_count, 2u);
  EXPECT_EQ(s.con_count, 3u);
  EXPECT_EQ(s.depth_histogram, (std::map<std::size_t, std::size_t>{{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
  EXPECT_DOUBLE_EQ(s.mean_depth, 3.0);
}

TEST(Stats, MatchesSynthLedger) {
  SynthConfig c;
  c.topic_count = 60;
  c.seed = 9;
  auto corpus = generate_corpus(c);
  auto s = corpus_stats(corpus.trees);
  EXPECT_EQ(s.topic_count, corpus.ledger.topics);
  EXPECT_EQ(s.claim_count, corpus.ledger.nodes);
  EXPECT_EQ(s.pro_count, corpus.ledger.pro_edges);
  EXPECT_EQ(s.con_count, corpus.ledger.con_edges);
  EXPECT_EQ(s.pro_count + s.con_count + s.topic_count, s.claim_count);
}

TEST(Stats, BucketsAndInvalidTrees) {
  EXPECT_EQ(size_bucket(10), "1-10");
  EXPECT_EQ(size_bucket(11), "11-30");
  EXPECT_EQ(size_bucket(1001), "1001+");
  auto t = chain({Stance::Pro});
  t.nodes["c1"].text = "  ";
  EXPECT_THROW(corpus_stats({t}), DataError);
}

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

#include "argtree/common/error.hpp"
#include "argtree/common/rng.hpp"
#include "argtree/eval/metrics.hpp"
#include "argtree/eval/report.hpp"
#include "argtree/eval/stratified.hpp"
#include "argtree/eval/ttest.hpp"

using namespace argtree;

namespace {

std::vector<EvalRecord> random_records(std::size_t n, int max_distance, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<EvalRecord> out;
  for (std::size_t i = 0; i < n; ++i) {
    EvalRecord r;
    r.topic_id = "t" + std::to_string(rng.below(12));
    r.distance = rng.between(1, max_distance);
    if (rng.bernoulli(0.8)) r.same_stance = rng.bernoulli(0.5);
    r.gold = rng.bernoulli(0.5);
    r.predicted = rng.bernoulli(0.7) ? r.gold : 1 - r.gold;
    out.push_back(r);
  }
  return out;
}

}  // namespace

TEST(Accuracy, Basics) {
  std::vector<int> g{1, 0, 1, 1};
  EXPECT_EQ(accuracy(g, g), 1.0);
  std::vector<int> p{1, 0, 0, 1};
  EXPECT_EQ(accuracy(p, g), 0.75);
  EXPECT_THROW(accuracy(std::vector<int>{1}, g), DataError);
  EXPECT_THROW(accuracy(std::vector<int>{}, std::vector<int>{}), DataError);
}

TEST(Strata, ParseAndDefaults) {
  EXPECT_EQ(parse_strata("all,d1,d4,same-stance"), (std::vector<std::string>{"all", "d1", "d4", "same-stance"}));
  EXPECT_THROW(parse_strata("all,d0"), UsageError);
  EXPECT_THROW(parse_strata("everything"), UsageError);
  auto recs = random_records(50, 3, 1);
  EXPECT_EQ(default_strata(Task::Stance, recs), (std::vector<std::string>{"all", "d1", "d2", "d3"}));
  EXPECT_EQ(default_strata(Task::Specificity, recs).back(), "same-stance");
}

TEST(Strata, DistanceOneOnly) {
  auto recs = random_records(40, 1, 2);
  auto rep = stratified_eval("m", Task::Stance, recs, {"all", "d1"});
  EXPECT_EQ(rep.overall(), (StratumResult{"all", rep.find("d1")->count, rep.find("d1")->correct}));
}

TEST(Strata, DistancesPartitionTheTotal) {
  auto recs = random_records(3000, 5, 3);
  auto rep = stratified_eval("m", Task::Specificity, recs, default_strata(Task::Specificity, recs));
  std::size_t n = 0, c = 0, same_n = 0, same_c = 0;
  for (int d = 1; d <= 5; ++d) {
    const auto* s = rep.find("d" + std::to_string(d));
    ASSERT_NE(s, nullptr);
    n += s->count;
    c += s->correct;
  }
  for (const auto& r : recs) {
    if (r.same_stance == true) {
      ++same_n;
      same_c += r.gold == r.predicted;
    }
  }
  EXPECT_EQ(n, rep.overall().count);
  EXPECT_EQ(c, rep.overall().correct);
  EXPECT_EQ(rep.find("same-stance")->count, same_n);
  EXPECT_EQ(rep.find("same-stance")->correct, same_c);
}

TEST(Strata, Errors) {
  auto recs = random_records(10, 2, 4);
  EXPECT_THROW(stratified_eval("m", Task::Stance, recs, {"same-stance"}), UsageError);
  recs[3].distance = 0;
  EXPECT_THROW(stratified_eval("m", Task::Stance, recs, {"all"}), DataError);
}

TEST(TTest, HandFixture) {
  std::vector<double> a{1, 2, 3}, b{0, 0, 0};
  auto r = paired_t_test(a, b);
  EXPECT_NEAR(r.t, 2.0 * std::sqrt(3.0), 1e-12);
  EXPECT_EQ(r.df, 2);
  // Student t with 2 degrees of freedom: P(|T| > t) = 1 - t / sqrt(t^2 + 2).
  EXPECT_NEAR(r.p, 1.0 - r.t / std::sqrt(r.t * r.t + 2.0), 1e-12);
  EXPECT_FALSE(r.degenerate);
  EXPECT_DOUBLE_EQ(r.mean_difference, 2.0);
}

TEST(TTest, LargeSampleMatchesNormalTail) {
  // df = 400: the two-sided p at t is close to the normal tail.
  Rng rng(8);
  std::vector<double> a, b;
  for (int i = 0; i < 401; ++i) {
    a.push_back(rng.uniform());
    b.push_back(rng.uniform() - 0.03);
  }
  auto r = paired_t_test(a, b);
  EXPECT_NEAR(r.p, std::erfc(std::abs(r.t) / std::sqrt(2.0)), 2e-3);
}

TEST(TTest, DegenerateAndAntisymmetric) {
  std::vector<double> a{0.5, 0.6, 0.7}, same{0.5, 0.6, 0.7};
  EXPECT_TRUE(paired_t_test(a, same).degenerate);
  std::vector<double> x{0.2, 0.3, 0.4, 0.5}, y{0.1, 0.2, 0.3, 0.4};
  auto d = paired_t_test(x, y);
  EXPECT_TRUE(d.degenerate);
  EXPECT_EQ(d.p, 1.0);
  std::vector<double> u{0.9, 0.4, 0.75, 0.6, 0.3}, v{0.5, 0.45, 0.6, 0.2, 0.35};
  auto ab = paired_t_test(u, v), ba = paired_t_test(v, u);
  EXPECT_DOUBLE_EQ(ab.t, -ba.t);
  EXPECT_DOUBLE_EQ(ab.p, ba.p);
  EXPECT_THROW(paired_t_test(std::vector<double>{1}, std::vector<double>{2}), DataError);
  EXPECT_THROW(paired_t_test(u, x), DataError);
}

TEST(TTest, PerTopicPairing) {
  auto a = random_records(200, 3, 5);
  auto b = a;
  for (auto& r : b) r.predicted = r.gold;
  auto paired = paired_topic_accuracy(a, b);
  ASSERT_EQ(paired.topics.size(), paired.a.size());
  EXPECT_TRUE(std::is_sorted(paired.topics.begin(), paired.topics.end()));
  for (double acc : paired.b) EXPECT_EQ(acc, 1.0);
  auto counts = per_topic_counts(a);
  for (std::size_t i = 0; i < paired.topics.size(); ++i) {
    const auto [c, n] = counts.at(paired.topics[i]);
    EXPECT_DOUBLE_EQ(paired.a[i], static_cast<double>(c) / static_cast<double>(n));
  }
  b.pop_back();
  b.back().topic_id = "elsewhere";
  EXPECT_THROW(paired_topic_accuracy(a, b), DataError);
}

TEST(Report, CsvShapeAndOrder) {
  EvalReport one{"length", Task::Specificity, {{"all", 4, 3}}};
  auto csv = format_report_csv(std::vector<EvalReport>{one});
  EXPECT_EQ(csv, "model,task,all,all_n\nlength,specificity,0.75,4\n");
  EvalReport a{"b-model", Task::Stance, {{"all", 3, 1}, {"d1", 0, 0}}};
  EvalReport b{"a-model", Task::Stance, {{"all", 2, 2}, {"d1", 2, 2}}};
  auto two = format_report_csv(std::vector<EvalReport>{a, b});
  EXPECT_EQ(two, "model,task,all,all_n,d1,d1_n\nb-model,stance,0.3333333333333333,3,,0\na-model,stance,1,2,1,2\n");
  EXPECT_EQ(parse_report_csv(two), (std::vector<EvalReport>{a, b}));
  EXPECT_EQ(two, format_report_csv(std::vector<EvalReport>{a, b}));
  EXPECT_THROW(format_report_csv(std::vector<EvalReport>{one, a}), DataError);
  EXPECT_THROW(format_report_csv(std::vector<EvalReport>{}), DataError);
}

TEST(Report, TextTable) {
  EvalReport a{"pair", Task::Stance, {{"all", 3, 1}, {"d1", 0, 0}}};
  auto text = format_report_text(std::vector<EvalReport>{a});
  EXPECT_NE(text.find("33.33 (3)"), std::string::npos);
  EXPECT_NE(text.find("- (0)"), std::string::npos);
}

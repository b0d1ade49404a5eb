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

#include "argtree/eval/ttest.hpp"

#include <cmath>

#include <boost/math/distributions/students_t.hpp>

#include "argtree/common/error.hpp"

namespace argtree {

TTestResult paired_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw DataError("paired t-test: samples have different lengths (" + std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()) + ")");
  }
  const std::size_t n = a.size();
  if (n < 2) throw DataError("paired t-test needs at least two pairs");
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean += a[i] - b[i];
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = (a[i] - b[i]) - mean;
    ss += e * e;
  }
  TTestResult r;
  r.df = static_cast<int>(n - 1);
  r.mean_difference = mean;
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (!(sd > 1e-12 * std::max(1.0, std::abs(mean)))) {
    r.degenerate = true;
    r.t = 0.0;
    r.p = 1.0;
    return r;
  }
  r.t = mean / (sd / std::sqrt(static_cast<double>(n)));
  boost::math::students_t dist(static_cast<double>(r.df));
  r.p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(r.t)));
  return r;
}

PairedTopicAccuracy paired_topic_accuracy(std::span<const EvalRecord> a, std::span<const EvalRecord> b) {
  const auto ca = per_topic_counts(a);
  const auto cb = per_topic_counts(b);
  PairedTopicAccuracy out;
  for (const auto& [topic, counts] : ca) {
    auto it = cb.find(topic);
    if (it == cb.end()) throw DataError("topic '" + topic + "' scored for the first model only");
    out.topics.push_back(topic);
    out.a.push_back(static_cast<double>(counts.first) / static_cast<double>(counts.second));
    out.b.push_back(static_cast<double>(it->second.first) / static_cast<double>(it->second.second));
  }
  for (const auto& [topic, counts] : cb) {
    if (!ca.count(topic)) throw DataError("topic '" + topic + "' scored for the second model only");
  }
  return out;
}

}  // namespace argtree

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

#include <span>
#include <string>
#include <vector>

#include "argtree/eval/stratified.hpp"

namespace argtree {

struct TTestResult {
  double t = 0.0;
  double p = 1.0;  // two-sided
  int df = 0;
  double mean_difference = 0.0;
  bool degenerate = false;  // differences have zero variance; t and p are not defined
};

// Paired t-test on a[i] - b[i]. Throws DataError on a length mismatch or
// fewer than two pairs.
TTestResult paired_t_test(std::span<const double> a, std::span<const double> b);

struct PairedTopicAccuracy {
  std::vector<std::string> topics;  // sorted
  std::vector<double> a;
  std::vector<double> b;
};

// Per-topic accuracies of two models scored on the same test examples.
// Throws DataError when the two record sets cover different topics.
PairedTopicAccuracy paired_topic_accuracy(std::span<const EvalRecord> a, std::span<const EvalRecord> b);

}  // namespace argtree

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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "argtree/corpus/tree.hpp"

namespace argtree {

struct CorpusStats {
  std::size_t topic_count = 0;
  std::size_t claim_count = 0;  // every node, theses included
  std::size_t pro_count = 0;
  std::size_t con_count = 0;
  std::map<std::size_t, std::size_t> depth_histogram;  // node depth -> claims
  std::map<std::string, std::size_t> size_histogram;   // size bucket -> trees
  double mean_claims_per_tree = 0.0;
  double mean_depth = 0.0;  // mean over trees of the deepest node
  double mean_tokens_per_claim = 0.0;
  std::map<std::size_t, double> sentence_count_distribution;  // sentences -> fraction of claims
};

// Bucket label for a tree with `claims` nodes: "1-10", "11-30", "31-100",
// "101-300", "301-1000" or "1001+".
std::string size_bucket(std::size_t claims);

// Throws DataError if any tree fails validation.
CorpusStats corpus_stats(const std::vector<ArgumentTree>& corpus);

std::string stats_to_json(const CorpusStats& stats, int indent = 2);

}  // namespace argtree

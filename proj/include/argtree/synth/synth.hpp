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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "argtree/corpus/tree.hpp"

namespace argtree {

struct SynthConfig {
  std::size_t topic_count = 100;
  int branching_min = 1;
  int branching_max = 3;
  int depth_min = 2;  // edges from the thesis to the deepest claim
  int depth_max = 5;
  double con_probability = 0.53;
  double length_signal_p = 0.9;   // child gains 3-8 tokens; otherwise loses 1-3
  double stance_marker_p = 0.95;  // marker present on Con edges, absent on Pro
  double connective_p = 0.8;      // non-root claim opens with also/but/only/because
  std::uint64_t seed = 0;

  // Throws UsageError for out-of-range probabilities and unsatisfiable or
  // oversized bounds.
  void validate() const;
};

// Sets one field from its text form. Returns false for unknown keys; throws
// UsageError for unparsable values.
bool set_synth_option(SynthConfig& config, std::string_view key, std::string_view value);

// Counts over every ancestor/descendant pair at one distance.
struct DistanceLedger {
  int distance = 0;
  std::size_t pairs = 0;
  std::size_t longer = 0;  // descendant has more tokens than the ancestor
  std::size_t equal = 0;
  std::size_t shorter = 0;
  std::size_t marker_parity_faithful = 0;  // marker parity along the path equals the gold stance parity

  // Accuracy of the length baseline on these pairs under random orientation:
  // ties are right half of the time.
  double expected_length_accuracy() const;
};

struct SynthLedger {
  std::size_t topics = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t pro_edges = 0;
  std::size_t con_edges = 0;
  std::size_t length_signal_fired = 0;  // per edge
  std::size_t marker_faithful = 0;      // per edge
  std::size_t connective_fired = 0;     // per non-root claim
  std::vector<DistanceLedger> distances;  // distance 1, 2, ...

  const DistanceLedger* at(int distance) const;
};

struct SynthCorpus {
  std::vector<ArgumentTree> trees;
  SynthLedger ledger;
};

// Claim texts carry three planted signals:
//  - length: most children are longer than their parent;
//  - connectives: non-root claims often open with also/but/only/because;
//  - stance markers: every claim holds one anchor word, and a Con child
//    (with probability stance_marker_p; a Pro child otherwise) repeats its
//    parent's anchor as the marker. Anchors differ from those of the five
//    nearest ancestors, so within any path of up to four edges an anchor
//    occurs twice in two claims only when they are parent and marked child.
SynthCorpus generate_corpus(const SynthConfig& config);

// One JSON object per line: a summary record, then one record per distance.
std::string format_ledger(const SynthLedger& ledger);

// The anchor vocabulary, for tests and diagnostics.
const std::vector<std::string>& synth_anchor_words();

}  // namespace argtree

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

#include <cstdint>
#include <span>
#include <vector>

#include "argtree/corpus/tree.hpp"
#include "argtree/pairs/examples.hpp"

namespace argtree {

// Supports iff the number of Con edges is even. Throws DataError on an empty
// edge sequence.
StanceLabel derive_stance_label(std::span<const Stance> path_edges);

// One example per ancestor/descendant pair with distance <= max_distance.
// Which claim is shown first is decided by a coin flip keyed on (seed,
// topic, ancestor, descendant), so the result does not depend on traversal
// order. Trees are emitted in corpus order, pairs in visit_ancestor_paths
// order.
std::vector<SpecificityExample> derive_specificity_examples(const std::vector<ArgumentTree>& corpus,
                                                            std::size_t max_distance,
                                                            std::uint64_t seed);

std::vector<StanceExample> derive_stance_examples(const std::vector<ArgumentTree>& corpus,
                                                  std::size_t max_distance);

}  // namespace argtree

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

#include "argtree/corpus/tree.hpp"
#include "argtree/pairs/examples.hpp"

namespace argtree {

// Recursive definition of relative stance, written independently of the
// parity rule in derive_stance_label: the stance of a child towards a is its
// edge when its parent is a, otherwise the parent's stance towards a, kept
// by a Pro edge and flipped by a Con edge. Throws DataError unless `a` is a
// proper ancestor of `b`.
StanceLabel stance_oracle(const ArgumentTree& tree, const ClaimId& a, const ClaimId& b);

}  // namespace argtree

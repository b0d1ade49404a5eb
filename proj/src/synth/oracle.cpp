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

#include "argtree/synth/oracle.hpp"

#include "argtree/common/error.hpp"

namespace argtree {

namespace {

StanceLabel flip(StanceLabel s) { return s == StanceLabel::Supports ? StanceLabel::Opposes : StanceLabel::Supports; }

StanceLabel oracle_rec(const ArgumentTree& tree, const ClaimId& a, const ClaimId& b, std::size_t budget) {
  if (budget == 0) throw DataError("cycle above '" + b + "'");
  const ClaimNode& node = tree.node(b);
  if (!node.parent || !node.stance) throw DataError("'" + a + "' is not an ancestor of '" + b + "'");
  const StanceLabel edge = *node.stance == Stance::Pro ? StanceLabel::Supports : StanceLabel::Opposes;
  if (*node.parent == a) return edge;
  const StanceLabel above = oracle_rec(tree, a, *node.parent, budget - 1);
  return *node.stance == Stance::Pro ? above : flip(above);
}

}  // namespace

StanceLabel stance_oracle(const ArgumentTree& tree, const ClaimId& a, const ClaimId& b) {
  if (!tree.contains(a)) throw DataError("unknown id '" + a + "'");
  if (a == b) throw DataError("'" + a + "' is not an ancestor of itself");
  return oracle_rec(tree, a, b, tree.size() + 1);
}

}  // namespace argtree

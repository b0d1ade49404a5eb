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
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace argtree {

enum class Stance { Pro, Con };

// "pro" / "con", the spelling used in corpus files.
std::string_view to_string(Stance stance);
std::optional<Stance> parse_stance(std::string_view text);

using ClaimId = std::string;

struct ClaimNode {
  ClaimId id;
  std::string text;
  std::optional<ClaimId> parent;  // absent for the thesis
  std::optional<Stance> stance;   // stance towards `parent`
  std::vector<ClaimId> children;  // file order

  bool operator==(const ClaimNode&) const = default;
};

// A thesis-rooted tree of claims. This is plain data: it can hold invalid
// structures (so that validate_tree can report them); use TreeBuilder to
// construct trees that are valid by construction.
struct ArgumentTree {
  std::string topic_id;
  std::set<std::string> tags;
  std::map<ClaimId, ClaimNode> nodes;
  ClaimId root_id;

  bool contains(const ClaimId& id) const { return nodes.count(id) != 0; }
  // Throws DataError("unknown id ...").
  const ClaimNode& node(const ClaimId& id) const;
  std::size_t size() const { return nodes.size(); }

  bool operator==(const ArgumentTree&) const = default;
};

class TreeBuilder {
 public:
  TreeBuilder(std::string topic_id, ClaimId root_id, std::string thesis);

  TreeBuilder& tag(std::string tag);
  // Throws DataError on unknown parent or duplicate id.
  TreeBuilder& add(const ClaimId& parent, ClaimId id, Stance stance, std::string text);

  const ArgumentTree& tree() const { return tree_; }
  ArgumentTree build() && { return std::move(tree_); }

 private:
  ArgumentTree tree_;
};

struct Violation {
  ClaimId node_id;
  std::string rule;
  std::string detail;
};

// Empty iff every structural invariant holds.
std::vector<Violation> validate_tree(const ArgumentTree& tree);

// Edges from the root. Throws DataError for unknown ids or broken chains.
std::size_t node_depth(const ArgumentTree& tree, const ClaimId& id);

struct ArgumentPath {
  std::vector<ClaimId> nodes;  // ancestor first
  std::vector<Stance> edges;   // edges[i] is the stance of nodes[i + 1] to nodes[i]

  std::size_t distance() const { return edges.size(); }
};

// Throws DataError("not on one path") unless `ancestor` is a proper ancestor
// of `descendant`.
ArgumentPath path_between(const ArgumentTree& tree, const ClaimId& ancestor,
                          const ClaimId& descendant);

// Node ids in depth-first preorder, children in stored order.
std::vector<ClaimId> preorder(const ArgumentTree& tree);

// Calls `visit` once per ancestor/descendant pair with distance in
// [1, max_distance]. The span runs from the ancestor down to the descendant.
// Descendants are visited in preorder and, for each, ancestors by increasing
// distance. The tree must be valid.
void visit_ancestor_paths(const ArgumentTree& tree, std::size_t max_distance,
                          const std::function<void(std::span<const ClaimNode* const>)>& visit);

struct AncestorPair {
  ClaimId ancestor;
  ClaimId descendant;
  std::size_t distance = 0;

  bool operator==(const AncestorPair&) const = default;
};

std::vector<AncestorPair> ancestor_descendant_pairs(const ArgumentTree& tree,
                                                    std::size_t max_distance);

// Longest root-to-leaf edge count.
std::size_t tree_depth(const ArgumentTree& tree);

}  // namespace argtree

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

#include "argtree/corpus/tree.hpp"

#include <algorithm>
#include <unordered_map>

#include "argtree/common/error.hpp"
#include "argtree/corpus/text.hpp"

namespace argtree {

std::string_view to_string(Stance stance) {
  return stance == Stance::Pro ? "pro" : "con";
}

std::optional<Stance> parse_stance(std::string_view text) {
  if (text == "pro") return Stance::Pro;
  if (text == "con") return Stance::Con;
  return std::nullopt;
}

const ClaimNode& ArgumentTree::node(const ClaimId& id) const {
  auto it = nodes.find(id);
  if (it == nodes.end()) throw DataError("unknown id '" + id + "' in topic '" + topic_id + "'");
  return it->second;
}

TreeBuilder::TreeBuilder(std::string topic_id, ClaimId root_id, std::string thesis) {
  tree_.topic_id = std::move(topic_id);
  tree_.root_id = root_id;
  ClaimNode root;
  root.id = root_id;
  root.text = std::move(thesis);
  tree_.nodes.emplace(std::move(root_id), std::move(root));
}

TreeBuilder& TreeBuilder::tag(std::string tag) {
  tree_.tags.insert(std::move(tag));
  return *this;
}

TreeBuilder& TreeBuilder::add(const ClaimId& parent, ClaimId id, Stance stance, std::string text) {
  auto it = tree_.nodes.find(parent);
  if (it == tree_.nodes.end()) throw DataError("unknown parent '" + parent + "'");
  if (tree_.contains(id)) throw DataError("duplicate id '" + id + "'");
  it->second.children.push_back(id);
  ClaimNode node;
  node.id = id;
  node.text = std::move(text);
  node.parent = parent;
  node.stance = stance;
  tree_.nodes.emplace(std::move(id), std::move(node));
  return *this;
}

std::vector<Violation> validate_tree(const ArgumentTree& tree) {
  std::vector<Violation> out;
  auto report = [&](const ClaimId& id, std::string rule, std::string detail) {
    out.push_back({id, std::move(rule), std::move(detail)});
  };

  if (!tree.contains(tree.root_id)) {
    report(tree.root_id, "missing root", "root id is not a node of the tree");
  }

  for (const auto& [key, node] : tree.nodes) {
    if (key != node.id) report(key, "id mismatch", "node stored under '" + key + "' has id '" + node.id + "'");
    if (trim(node.text).empty()) report(key, "empty text", "claim text is empty after trimming");
    if (node.parent.has_value() != node.stance.has_value()) {
      report(key, "stance/parent mismatch", node.parent ? "non-root claim without stance" : "root claim with stance");
    }
    if (!node.parent) {
      if (key != tree.root_id) report(key, "multiple roots", "claim has no parent but is not the root");
    } else {
      if (key == tree.root_id) report(key, "root has parent", "root claim names parent '" + *node.parent + "'");
      auto parent = tree.nodes.find(*node.parent);
      if (parent == tree.nodes.end()) {
        report(key, "dangling parent", "parent '" + *node.parent + "' does not exist");
      } else {
        const auto& siblings = parent->second.children;
        if (std::find(siblings.begin(), siblings.end(), key) == siblings.end()) {
          report(key, "parent link", "parent '" + *node.parent + "' does not list this claim as a child");
        }
      }
    }
    std::set<ClaimId> seen;
    for (const auto& child : node.children) {
      if (!seen.insert(child).second) {
        report(key, "duplicate child", "child '" + child + "' listed twice");
        continue;
      }
      auto it = tree.nodes.find(child);
      if (it == tree.nodes.end()) {
        report(key, "child link", "child '" + child + "' does not exist");
      } else if (it->second.parent != key) {
        report(key, "child link", "child '" + child + "' names a different parent");
      }
    }
  }

  // Cycle detection along parent chains. 0 = unknown, 1 = reaches a
  // terminal (root, parentless or dangling), 2 = on or above a cycle.
  std::unordered_map<std::string, int> state;
  for (const auto& [key, node] : tree.nodes) {
    if (state.count(key)) continue;
    std::vector<const ClaimNode*> chain;
    std::unordered_map<std::string, std::size_t> position;
    const ClaimNode* current = &node;
    int verdict = 1;
    while (true) {
      auto known = state.find(current->id);
      if (known != state.end()) {
        verdict = known->second;
        break;
      }
      auto pos = position.find(current->id);
      if (pos != position.end()) {
        for (std::size_t i = pos->second; i < chain.size(); ++i) {
          report(chain[i]->id, "cycle", "claim is its own ancestor");
        }
        verdict = 2;
        break;
      }
      position.emplace(current->id, chain.size());
      chain.push_back(current);
      if (!current->parent) break;
      auto parent = tree.nodes.find(*current->parent);
      if (parent == tree.nodes.end()) break;
      current = &parent->second;
    }
    for (const ClaimNode* n : chain) state[n->id] = verdict;
  }
  return out;
}

std::size_t node_depth(const ArgumentTree& tree, const ClaimId& id) {
  const ClaimNode* current = &tree.node(id);
  std::size_t depth = 0;
  while (current->parent) {
    if (++depth > tree.nodes.size()) throw DataError("cycle above '" + id + "'");
    current = &tree.node(*current->parent);
  }
  if (current->id != tree.root_id) throw DataError("claim '" + id + "' is not connected to the root");
  return depth;
}

ArgumentPath path_between(const ArgumentTree& tree, const ClaimId& ancestor,
                          const ClaimId& descendant) {
  tree.node(ancestor);
  const ClaimNode* current = &tree.node(descendant);
  auto not_on_path = [&] {
    return DataError("not on one path: '" + ancestor + "' is not a proper ancestor of '" + descendant + "'");
  };
  if (ancestor == descendant) throw not_on_path();
  ArgumentPath path;
  std::vector<ClaimId> upward{current->id};
  std::vector<Stance> edges;
  while (current->id != ancestor) {
    if (!current->parent || !current->stance || upward.size() > tree.nodes.size()) throw not_on_path();
    edges.push_back(*current->stance);
    current = &tree.node(*current->parent);
    upward.push_back(current->id);
  }
  path.nodes.assign(upward.rbegin(), upward.rend());
  path.edges.assign(edges.rbegin(), edges.rend());
  return path;
}

std::vector<ClaimId> preorder(const ArgumentTree& tree) {
  std::vector<ClaimId> order;
  if (!tree.contains(tree.root_id)) return order;
  std::vector<const ClaimNode*> stack{&tree.node(tree.root_id)};
  while (!stack.empty()) {
    const ClaimNode* n = stack.back();
    stack.pop_back();
    order.push_back(n->id);
    for (auto it = n->children.rbegin(); it != n->children.rend(); ++it) {
      stack.push_back(&tree.node(*it));
    }
  }
  return order;
}

namespace {

void visit_from(const ArgumentTree& tree, const ClaimNode& node, std::size_t max_distance,
                std::vector<const ClaimNode*>& stack,
                const std::function<void(std::span<const ClaimNode* const>)>& visit) {
  stack.push_back(&node);
  const std::size_t depth = stack.size() - 1;
  for (std::size_t d = 1; d <= std::min(max_distance, depth); ++d) {
    visit(std::span<const ClaimNode* const>(stack.data() + (depth - d), d + 1));
  }
  for (const auto& child : node.children) visit_from(tree, tree.node(child), max_distance, stack, visit);
  stack.pop_back();
}

}  // namespace

void visit_ancestor_paths(const ArgumentTree& tree, std::size_t max_distance,
                          const std::function<void(std::span<const ClaimNode* const>)>& visit) {
  if (!tree.contains(tree.root_id)) return;
  std::vector<const ClaimNode*> stack;
  visit_from(tree, tree.node(tree.root_id), max_distance, stack, visit);
}

std::vector<AncestorPair> ancestor_descendant_pairs(const ArgumentTree& tree,
                                                    std::size_t max_distance) {
  std::vector<AncestorPair> pairs;
  visit_ancestor_paths(tree, max_distance, [&](std::span<const ClaimNode* const> path) {
    pairs.push_back({path.front()->id, path.back()->id, path.size() - 1});
  });
  return pairs;
}

std::size_t tree_depth(const ArgumentTree& tree) {
  std::size_t deepest = 0;
  if (!tree.contains(tree.root_id)) return 0;
  std::vector<std::pair<const ClaimNode*, std::size_t>> stack{{&tree.node(tree.root_id), 0}};
  while (!stack.empty()) {
    auto [n, d] = stack.back();
    stack.pop_back();
    deepest = std::max(deepest, d);
    for (const auto& child : n->children) stack.emplace_back(&tree.node(child), d + 1);
  }
  return deepest;
}

}  // namespace argtree

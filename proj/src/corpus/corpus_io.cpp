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

#include "argtree/corpus/corpus_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "argtree/common/error.hpp"

namespace argtree {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(std::size_t line, const std::string& reason) {
  throw DataError("line " + std::to_string(line) + ": " + reason);
}

std::string require_string(const Json& obj, const char* field, std::size_t line) {
  auto it = obj.find(field);
  if (it == obj.end()) fail(line, std::string("missing field '") + field + "'");
  if (!it->is_string()) fail(line, std::string("field '") + field + "' must be a string");
  return it->get<std::string>();
}

}  // namespace

ArgumentTree parse_tree(const std::string& text, std::size_t line) {
  Json record;
  try {
    record = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(line, std::string("malformed record: ") + e.what());
  }
  if (!record.is_object()) fail(line, "malformed record: expected an object");
  auto schema = record.find("schema");
  if (schema == record.end() || !schema->is_string()) fail(line, "missing field 'schema'");
  if (schema->get<std::string>() != kCorpusSchema) {
    fail(line, "schema-version mismatch: expected '" + std::string(kCorpusSchema) + "', got '" +
                   schema->get<std::string>() + "'");
  }

  ArgumentTree tree;
  tree.topic_id = require_string(record, "topic_id", line);
  auto tags = record.find("tags");
  if (tags == record.end() || !tags->is_array()) fail(line, "field 'tags' must be a string array");
  for (const auto& tag : *tags) {
    if (!tag.is_string()) fail(line, "field 'tags' must be a string array");
    tree.tags.insert(tag.get<std::string>());
  }
  auto claims = record.find("claims");
  if (claims == record.end() || !claims->is_array()) fail(line, "field 'claims' must be an array");

  std::vector<ClaimId> order;
  bool have_root = false;
  for (const auto& claim : *claims) {
    if (!claim.is_object()) fail(line, "claims entries must be objects");
    ClaimNode node;
    node.id = require_string(claim, "id", line);
    node.text = require_string(claim, "text", line);
    auto parent = claim.find("parent");
    if (parent == claim.end()) fail(line, "claim '" + node.id + "': missing field 'parent'");
    if (parent->is_string()) {
      node.parent = parent->get<std::string>();
    } else if (!parent->is_null()) {
      fail(line, "claim '" + node.id + "': field 'parent' must be a string or null");
    }
    auto stance = claim.find("stance");
    if (stance == claim.end()) fail(line, "claim '" + node.id + "': missing field 'stance'");
    if (stance->is_string()) {
      auto parsed = parse_stance(stance->get<std::string>());
      if (!parsed) {
        fail(line, "claim '" + node.id + "': field 'stance' must be \"pro\", \"con\" or null, got \"" +
                       stance->get<std::string>() + "\"");
      }
      node.stance = parsed;
    } else if (!stance->is_null()) {
      fail(line, "claim '" + node.id + "': field 'stance' must be \"pro\", \"con\" or null");
    }
    if (!node.parent && !have_root) {
      tree.root_id = node.id;
      have_root = true;
    }
    if (tree.contains(node.id)) fail(line, "duplicate id '" + node.id + "'");
    order.push_back(node.id);
    tree.nodes.emplace(node.id, std::move(node));
  }
  if (!have_root) fail(line, "no root claim (a claim with null parent)");
  for (const auto& id : order) {
    const auto& parent = tree.nodes.at(id).parent;
    if (!parent) continue;
    auto it = tree.nodes.find(*parent);
    if (it != tree.nodes.end()) it->second.children.push_back(id);
  }
  return tree;
}

std::vector<ArgumentTree> parse_corpus(std::istream& in) {
  std::vector<ArgumentTree> trees;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    trees.push_back(parse_tree(line, number));
  }
  return trees;
}

std::vector<ArgumentTree> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("file not found: " + path.string());
  try {
    return parse_corpus(in);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::string format_tree(const ArgumentTree& tree) {
  Json record;
  record["schema"] = kCorpusSchema;
  record["topic_id"] = tree.topic_id;
  record["tags"] = Json::array();
  for (const auto& tag : tree.tags) record["tags"].push_back(tag);
  record["claims"] = Json::array();

  std::set<ClaimId> written;
  auto emit = [&](const ClaimNode& node) {
    Json claim;
    claim["id"] = node.id;
    claim["parent"] = node.parent ? Json(*node.parent) : Json(nullptr);
    claim["stance"] = node.stance ? Json(std::string(to_string(*node.stance))) : Json(nullptr);
    claim["text"] = node.text;
    record["claims"].push_back(std::move(claim));
    written.insert(node.id);
  };
  if (tree.contains(tree.root_id) && validate_tree(tree).empty()) {
    for (const auto& id : preorder(tree)) emit(tree.node(id));
  } else if (tree.contains(tree.root_id)) {
    emit(tree.node(tree.root_id));
  }
  for (const auto& [id, node] : tree.nodes) {
    if (!written.count(id)) emit(node);
  }
  return record.dump();
}

void write_corpus(std::ostream& out, const std::vector<ArgumentTree>& trees) {
  for (const auto& tree : trees) out << format_tree(tree) << '\n';
}

std::string format_corpus(const std::vector<ArgumentTree>& trees) {
  std::ostringstream out;
  write_corpus(out, trees);
  return out.str();
}

}  // namespace argtree

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

#include "argtree/corpus/outline.hpp"

#include <istream>
#include <optional>
#include <regex>

#include "argtree/common/error.hpp"
#include "argtree/corpus/text.hpp"

namespace argtree {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& reason) {
  throw DataError("outline line " + std::to_string(line) + ": " + reason);
}

}  // namespace

ArgumentTree import_outline(std::istream& in, const std::string& topic_id) {
  static const std::regex numbered(R"(^\s*(\d+(?:\.\d+)*)\.\s+(.*)$)");
  static const std::regex stanced(R"(^([A-Za-z]+):\s*(.*)$)");

  std::optional<TreeBuilder> builder;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    std::smatch m;
    if (!std::regex_match(line, m, numbered)) fail(number, "expected '<number>. <text>'");
    const std::string id = m[1].str();
    const std::string rest(trim(m[2].str()));

    if (!builder) {
      if (id != "1") fail(number, "orphan numbering: the first entry must be '1. <thesis>', got '" + id + "'");
      if (rest.empty()) fail(number, "empty thesis text");
      builder.emplace(topic_id, id, rest);
      continue;
    }

    const auto dot = id.rfind('.');
    if (dot == std::string::npos) fail(number, "orphan numbering: second top-level entry '" + id + "'");
    const std::string parent = id.substr(0, dot);
    if (!builder->tree().contains(parent)) {
      fail(number, "orphan numbering: parent '" + parent + "' of '" + id + "' not seen before");
    }
    if (builder->tree().contains(id)) fail(number, "duplicate number '" + id + "'");

    std::smatch s;
    if (!std::regex_match(rest, s, stanced)) fail(number, "expected '<Pro|Con>: <text>' after '" + id + ".'");
    const std::string keyword = s[1].str();
    Stance stance;
    if (keyword == "Pro") {
      stance = Stance::Pro;
    } else if (keyword == "Con") {
      stance = Stance::Con;
    } else {
      fail(number, "bad stance keyword '" + keyword + "' (expected Pro or Con)");
    }
    const std::string text(trim(s[2].str()));
    if (text.empty()) fail(number, "empty claim text for '" + id + "'");
    builder->add(parent, id, stance, text);
  }
  if (!builder) fail(number, "orphan numbering: no thesis line '1. <thesis>'");
  return std::move(*builder).build();
}

}  // namespace argtree

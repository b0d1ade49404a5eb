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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "argtree/corpus/tree.hpp"

namespace argtree {

inline constexpr std::string_view kCorpusSchema = "argtree/1";

// One tree per line. Throws DataError with the line number for malformed
// records, duplicate ids and schema mismatches. Blank lines are skipped.
std::vector<ArgumentTree> parse_corpus(std::istream& in);
std::vector<ArgumentTree> load_corpus(const std::filesystem::path& path);

// Canonical single-line encoding. Claims are written in preorder so that
// parsing restores child order exactly.
std::string format_tree(const ArgumentTree& tree);
ArgumentTree parse_tree(const std::string& line, std::size_t line_number = 1);

void write_corpus(std::ostream& out, const std::vector<ArgumentTree>& trees);
std::string format_corpus(const std::vector<ArgumentTree>& trees);

}  // namespace argtree

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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace argtree {

// Token index built from training texts only. Indices are dense from 0 and
// ordered by descending corpus frequency, ties alphabetical.
class Vocabulary {
 public:
  Vocabulary() = default;

  // Tokenizes every text with the canonical tokenizer and keeps tokens seen
  // at least `min_count` times. Throws DataError on empty input.
  static Vocabulary build(const std::vector<std::string>& texts, std::size_t min_count = 2,
                          std::string built_from = "train");

  std::optional<std::size_t> index(std::string_view token) const;
  const std::string& token(std::size_t index) const { return tokens_.at(index); }
  std::size_t count(std::size_t index) const { return counts_.at(index); }
  std::size_t size() const { return tokens_.size(); }
  std::size_t min_count() const { return min_count_; }
  const std::string& built_from() const { return built_from_; }
  const std::vector<std::string>& tokens() const { return tokens_; }

  std::string serialize() const;
  static Vocabulary parse(const std::string& text);
  static Vocabulary load(const std::filesystem::path& path);

  bool operator==(const Vocabulary& other) const {
    return tokens_ == other.tokens_ && counts_ == other.counts_ && min_count_ == other.min_count_ &&
           built_from_ == other.built_from_;
  }

 private:
  void reindex();

  std::vector<std::string> tokens_;
  std::vector<std::size_t> counts_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t min_count_ = 1;
  std::string built_from_;
};

}  // namespace argtree

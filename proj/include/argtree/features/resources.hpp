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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace argtree {

enum class Subjectivity { None, Weak, Strong };

struct LexiconEntry {
  double polarity = 0.0;  // in [-1, 1]
  Subjectivity subjectivity = Subjectivity::None;
};

// Polarity/subjectivity lexicon, one `token<TAB>polarity<TAB>strong|weak`
// entry per line. Lines starting with '#' are comments.
class Lexicon {
 public:
  Lexicon() = default;

  static Lexicon parse(std::istream& in);
  static Lexicon load(const std::filesystem::path& path);

  void add(std::string token, LexiconEntry entry);
  const LexiconEntry* find(std::string_view token) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, LexiconEntry> entries_;
};

// Word vectors, one `token v1 ... vk` line each with a constant k.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;

  // Throws DataError on a dimension mismatch or malformed number.
  static EmbeddingTable parse(std::istream& in);
  static EmbeddingTable load(const std::filesystem::path& path);

  void add(std::string token, std::vector<double> vector);
  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return vectors_.size(); }
  // Zero vector for out-of-table tokens.
  std::vector<double> lookup(std::string_view token) const;
  // Mean over in-table tokens; nullopt when none are in the table.
  std::optional<std::vector<double>> mean(const std::vector<std::string>& tokens) const;

 private:
  std::size_t dimension_ = 0;
  std::unordered_map<std::string, std::vector<double>> vectors_;
};

// Cosine similarity; 0 when either vector has zero norm.
double cosine(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace argtree

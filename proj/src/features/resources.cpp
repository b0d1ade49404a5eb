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

#include "argtree/features/resources.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "argtree/common/error.hpp"
#include "argtree/common/format.hpp"

namespace argtree {

Lexicon Lexicon::parse(std::istream& in) {
  Lexicon lexicon;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream row(line);
    std::string field;
    while (std::getline(row, field, '\t')) fields.push_back(field);
    const std::string where = "lexicon line " + std::to_string(number);
    if (fields.size() != 3) throw DataError(where + ": expected token<TAB>polarity<TAB>strong|weak");
    LexiconEntry entry;
    entry.polarity = parse_double(fields[1], where + " polarity");
    if (!(entry.polarity >= -1.0 && entry.polarity <= 1.0)) throw DataError(where + ": polarity outside [-1, 1]");
    if (fields[2] == "strong") {
      entry.subjectivity = Subjectivity::Strong;
    } else if (fields[2] == "weak") {
      entry.subjectivity = Subjectivity::Weak;
    } else {
      throw DataError(where + ": subjectivity must be 'strong' or 'weak'");
    }
    if (lexicon.find(fields[0])) throw DataError(where + ": duplicate token '" + fields[0] + "'");
    lexicon.add(fields[0], entry);
  }
  return lexicon;
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("file not found: " + path.string());
  return parse(in);
}

void Lexicon::add(std::string token, LexiconEntry entry) {
  entries_[std::move(token)] = entry;
}

const LexiconEntry* Lexicon::find(std::string_view token) const {
  auto it = entries_.find(std::string(token));
  return it == entries_.end() ? nullptr : &it->second;
}

EmbeddingTable EmbeddingTable::parse(std::istream& in) {
  EmbeddingTable table;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream row(line);
    std::string token;
    if (!(row >> token)) continue;
    std::vector<double> values;
    std::string value;
    while (row >> value) values.push_back(parse_double(value, "embedding value"));
    if (values.empty()) throw DataError("embedding line " + std::to_string(number) + ": no values");
    if (table.dimension_ != 0 && values.size() != table.dimension_) {
      throw DataError("embedding line " + std::to_string(number) + ": dimension mismatch (expected " +
                      std::to_string(table.dimension_) + ", got " + std::to_string(values.size()) + ")");
    }
    table.add(std::move(token), std::move(values));
  }
  return table;
}

EmbeddingTable EmbeddingTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("file not found: " + path.string());
  return parse(in);
}

void EmbeddingTable::add(std::string token, std::vector<double> vector) {
  if (dimension_ == 0) dimension_ = vector.size();
  if (vector.size() != dimension_) throw DataError("embedding dimension mismatch for '" + token + "'");
  vectors_[std::move(token)] = std::move(vector);
}

std::vector<double> EmbeddingTable::lookup(std::string_view token) const {
  auto it = vectors_.find(std::string(token));
  if (it == vectors_.end()) return std::vector<double>(dimension_, 0.0);
  return it->second;
}

std::optional<std::vector<double>> EmbeddingTable::mean(const std::vector<std::string>& tokens) const {
  std::vector<double> sum(dimension_, 0.0);
  std::size_t hits = 0;
  for (const auto& token : tokens) {
    auto it = vectors_.find(token);
    if (it == vectors_.end()) continue;
    for (std::size_t i = 0; i < dimension_; ++i) sum[i] += it->second[i];
    ++hits;
  }
  if (hits == 0) return std::nullopt;
  for (double& v : sum) v /= static_cast<double>(hits);
  return sum;
}

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  double c = dot / (std::sqrt(na) * std::sqrt(nb));
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace argtree

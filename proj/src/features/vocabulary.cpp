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

#include "argtree/features/vocabulary.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "argtree/common/error.hpp"
#include "argtree/common/files.hpp"
#include "argtree/common/format.hpp"
#include "argtree/corpus/text.hpp"

namespace argtree {

namespace {
constexpr std::string_view kHeader = "# argtree-vocab/1";
}

Vocabulary Vocabulary::build(const std::vector<std::string>& texts, std::size_t min_count,
                             std::string built_from) {
  if (texts.empty()) throw DataError("cannot build a vocabulary from no texts");
  std::map<std::string, std::size_t> freq;
  for (const auto& text : texts) {
    for (auto& token : tokenize(text)) ++freq[std::move(token)];
  }
  std::vector<std::pair<std::string, std::size_t>> kept;
  for (auto& [token, count] : freq) {
    if (count >= min_count) kept.emplace_back(token, count);
  }
  std::stable_sort(kept.begin(), kept.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });

  Vocabulary vocab;
  vocab.min_count_ = min_count;
  vocab.built_from_ = std::move(built_from);
  for (auto& [token, count] : kept) {
    vocab.tokens_.push_back(std::move(token));
    vocab.counts_.push_back(count);
  }
  vocab.reindex();
  return vocab;
}

void Vocabulary::reindex() {
  index_.clear();
  for (std::size_t i = 0; i < tokens_.size(); ++i) index_.emplace(tokens_[i], i);
}

std::optional<std::size_t> Vocabulary::index(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string Vocabulary::serialize() const {
  std::ostringstream out;
  out << kHeader << " min_count=" << min_count_ << " built_from=" << built_from_ << '\n';
  for (std::size_t i = 0; i < tokens_.size(); ++i) out << tokens_[i] << '\t' << counts_[i] << '\n';
  return out.str();
}

Vocabulary Vocabulary::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind(kHeader, 0) != 0) {
    throw DataError("vocabulary file: missing '" + std::string(kHeader) + "' header");
  }
  Vocabulary vocab;
  std::istringstream header(line.substr(kHeader.size()));
  std::string field;
  while (header >> field) {
    if (field.rfind("min_count=", 0) == 0) {
      vocab.min_count_ = static_cast<std::size_t>(parse_int(field.substr(10), "min_count"));
    } else if (field.rfind("built_from=", 0) == 0) {
      vocab.built_from_ = field.substr(11);
    }
  }
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw DataError("vocabulary line " + std::to_string(number) + ": expected token<TAB>count");
    }
    vocab.tokens_.push_back(line.substr(0, tab));
    vocab.counts_.push_back(static_cast<std::size_t>(parse_int(line.substr(tab + 1), "count")));
  }
  vocab.reindex();
  if (vocab.index_.size() != vocab.tokens_.size()) throw DataError("vocabulary file: duplicate token");
  return vocab;
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

}  // namespace argtree

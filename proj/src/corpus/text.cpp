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

#include "argtree/corpus/text.hpp"

#include <cctype>

namespace argtree {

namespace {

bool is_space(unsigned char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }
bool is_punct(unsigned char c) { return c < 0x80 && std::ispunct(c); }
bool is_upper(unsigned char c) { return c >= 'A' && c <= 'Z'; }
char lower(unsigned char c) { return is_upper(c) ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c); }

}  // namespace

std::string_view trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  return text.substr(begin, end - begin);
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) tokens.push_back(std::move(word));
    word.clear();
  };
  for (unsigned char c : text) {
    if (is_space(c)) {
      flush();
    } else if (is_punct(c)) {
      flush();
      tokens.emplace_back(1, static_cast<char>(c));
    } else {
      word.push_back(lower(c));
    }
  }
  flush();
  return tokens;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  const std::size_t n = text.size();
  for (std::size_t i = 0; i < n; ++i) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    if (i + 1 >= n || !is_space(text[i + 1])) continue;
    std::size_t j = i + 1;
    while (j < n && is_space(text[j])) ++j;
    if (j < n && !is_upper(text[j])) continue;
    auto piece = trim(text.substr(start, i + 1 - start));
    if (!piece.empty()) sentences.emplace_back(piece);
    start = j;
    i = j == 0 ? 0 : j - 1;
  }
  auto rest = trim(text.substr(std::min(start, n)));
  if (!rest.empty()) sentences.emplace_back(rest);
  return sentences;
}

}  // namespace argtree

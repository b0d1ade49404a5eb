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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace argtree {

// Flat `key = value` settings shared by all subcommands. Lines starting with
// '#' are comments. Keys outside the known set are rejected.
class RunConfig {
 public:
  static const std::vector<std::string>& known_keys();

  // Throws UsageError on unknown keys or malformed lines.
  static RunConfig parse(std::string_view text);
  static RunConfig load(const std::filesystem::path& path);

  void set(const std::string& key, const std::string& value);
  // "key=value" form used by --set.
  void set_assignment(std::string_view assignment);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::optional<std::string> get(const std::string& key) const;
  double real(const std::string& key, double fallback) const;
  long long integer(const std::string& key, long long fallback) const;
  bool boolean(const std::string& key, bool fallback) const;

  const std::map<std::string, std::string>& values() const { return values_; }
  // "key=value" pairs in key order, space separated.
  std::string describe() const;

 private:
  std::map<std::string, std::string> values_;
};

// --seed flag, else the config file's seed, else ARGTREE_SEED, else 0.
// Throws UsageError when the environment value is not an integer.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, const RunConfig& config);

}  // namespace argtree

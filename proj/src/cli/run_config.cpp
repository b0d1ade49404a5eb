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

#include "argtree/cli/run_config.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "argtree/common/error.hpp"
#include "argtree/common/files.hpp"
#include "argtree/common/format.hpp"
#include "argtree/corpus/text.hpp"

namespace argtree {

const std::vector<std::string>& RunConfig::known_keys() {
  static const std::vector<std::string> keys{
      // training
      "learning_rate", "l2", "batch_size", "max_epochs", "patience", "optimizer", "min_count", "max_train_examples",
      // neural architecture
      "dim", "hidden", "max_tokens", "top_down",
      // synthetic corpora
      "topic_count", "branching_min", "branching_max", "depth_min", "depth_max", "con_probability",
      "length_signal_p", "stance_marker_p", "connective_p",
      // global
      "seed", "threads"};
  return keys;
}

void RunConfig::set(const std::string& key, const std::string& value) {
  const auto& keys = known_keys();
  if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw UsageError("unknown config key '" + key + "'");
  values_[key] = value;
}

void RunConfig::set_assignment(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw UsageError("expected key=value, got '" + std::string(assignment) + "'");
  set(std::string(trim(assignment.substr(0, eq))), std::string(trim(assignment.substr(eq + 1))));
}

RunConfig RunConfig::parse(std::string_view text) {
  RunConfig config;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    if (body.find('=') == std::string_view::npos) {
      throw UsageError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    try {
      config.set_assignment(body);
    } catch (const UsageError& e) {
      throw UsageError("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return config;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw UsageError("config file not found: " + path.string());
  return parse(read_file(path));
}

std::optional<std::string> RunConfig::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

double RunConfig::real(const std::string& key, double fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  try {
    return parse_double(*v, key);
  } catch (const DataError& e) {
    throw UsageError(e.what());
  }
}

long long RunConfig::integer(const std::string& key, long long fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  try {
    return parse_int(*v, key);
  } catch (const DataError& e) {
    throw UsageError(e.what());
  }
}

bool RunConfig::boolean(const std::string& key, bool fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  if (*v == "true" || *v == "1") return true;
  if (*v == "false" || *v == "0") return false;
  throw UsageError("config key '" + key + "' must be true or false");
}

std::string RunConfig::describe() const {
  std::string out;
  for (const auto& [k, v] : values_) {
    if (!out.empty()) out += ' ';
    out += k + "=" + v;
  }
  return out.empty() ? "(defaults)" : out;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, const RunConfig& config) {
  if (flag) return *flag;
  if (config.has("seed")) {
    const long long s = config.integer("seed", 0);
    if (s < 0) throw UsageError("seed must be non-negative");
    return static_cast<std::uint64_t>(s);
  }
  if (const char* env = std::getenv("ARGTREE_SEED"); env && *env) {
    try {
      const long long s = parse_int(env, "ARGTREE_SEED");
      if (s < 0) throw UsageError("ARGTREE_SEED must be non-negative");
      return static_cast<std::uint64_t>(s);
    } catch (const DataError& e) {
      throw UsageError(e.what());
    }
  }
  return 0;
}

}  // namespace argtree

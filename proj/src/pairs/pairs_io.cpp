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

#include "argtree/pairs/pairs_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "argtree/common/error.hpp"

namespace argtree {

namespace {

using Json = nlohmann::ordered_json;

Json same_stance_json(const std::optional<bool>& value) {
  if (!value) return "n/a";
  return *value;
}

[[noreturn]] void fail(std::size_t line, const std::string& reason) {
  throw DataError("pairs line " + std::to_string(line) + ": " + reason);
}

SpecificityExample parse_specificity(const nlohmann::json& j, std::size_t line) {
  SpecificityExample ex;
  ex.topic_id = j.at("topic_id").get<std::string>();
  ex.first_id = j.at("first_id").get<std::string>();
  ex.second_id = j.at("second_id").get<std::string>();
  ex.first_text = j.at("first_text").get<std::string>();
  ex.second_text = j.at("second_text").get<std::string>();
  ex.distance = j.at("distance").get<int>();
  const auto& same = j.at("same_stance");
  if (same.is_boolean()) {
    ex.same_stance = same.get<bool>();
  } else if (!(same.is_string() && same.get<std::string>() == "n/a")) {
    fail(line, "field 'same_stance' must be true, false or \"n/a\"");
  }
  auto label = parse_specificity_label(j.at("label").get<std::string>());
  if (!label) fail(line, "unknown specificity label '" + j.at("label").get<std::string>() + "'");
  ex.label = *label;
  if (ex.distance < 1) fail(line, "distance must be positive");
  return ex;
}

StanceExample parse_stance_example(const nlohmann::json& j, std::size_t line) {
  StanceExample ex;
  ex.topic_id = j.at("topic_id").get<std::string>();
  ex.a_id = j.at("a_id").get<std::string>();
  ex.b_id = j.at("b_id").get<std::string>();
  ex.distance = j.at("distance").get<int>();
  ex.path_texts = j.at("path_texts").get<std::vector<std::string>>();
  for (const auto& edge : j.at("path_edges")) {
    auto stance = parse_stance(edge.get<std::string>());
    if (!stance) fail(line, "unknown edge '" + edge.get<std::string>() + "' in 'path_edges'");
    ex.path_edges.push_back(*stance);
  }
  auto label = parse_stance_label(j.at("label").get<std::string>());
  if (!label) fail(line, "unknown stance label '" + j.at("label").get<std::string>() + "'");
  ex.label = *label;
  if (ex.distance < 1 || ex.path_edges.size() != static_cast<std::size_t>(ex.distance) ||
      ex.path_texts.size() != ex.path_edges.size() + 1) {
    fail(line, "path lengths do not match the distance");
  }
  return ex;
}

}  // namespace

std::string format_example(const SpecificityExample& ex) {
  Json j;
  j["task"] = "specificity";
  j["topic_id"] = ex.topic_id;
  j["first_id"] = ex.first_id;
  j["second_id"] = ex.second_id;
  j["distance"] = ex.distance;
  j["label"] = to_string(ex.label);
  j["same_stance"] = same_stance_json(ex.same_stance);
  j["first_text"] = ex.first_text;
  j["second_text"] = ex.second_text;
  return j.dump();
}

std::string format_example(const StanceExample& ex) {
  Json j;
  j["task"] = "stance";
  j["topic_id"] = ex.topic_id;
  j["a_id"] = ex.a_id;
  j["b_id"] = ex.b_id;
  j["distance"] = ex.distance;
  j["label"] = to_string(ex.label);
  // The thesis-relative notion does not apply to stance pairs.
  j["same_stance"] = "n/a";
  j["path_texts"] = ex.path_texts;
  auto& edges = j["path_edges"] = Json::array();
  for (Stance s : ex.path_edges) edges.push_back(to_string(s));
  return j.dump();
}

std::string format_pairs(const std::vector<SpecificityExample>& examples) {
  std::string out;
  for (const auto& ex : examples) out += format_example(ex) + "\n";
  return out;
}

std::string format_pairs(const std::vector<StanceExample>& examples) {
  std::string out;
  for (const auto& ex : examples) out += format_example(ex) + "\n";
  return out;
}

PairDataset parse_pairs(std::istream& in, Task fallback) {
  PairDataset data;
  data.task = fallback;
  bool seen = false;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto j = nlohmann::json::parse(line);
      Task task = parse_task(j.at("task").get<std::string>());
      if (seen && task != data.task) fail(number, "mixed tasks in one pairs file");
      seen = true;
      data.task = task;
      if (task == Task::Specificity) {
        data.specificity.push_back(parse_specificity(j, number));
      } else {
        data.stance.push_back(parse_stance_example(j, number));
      }
    } catch (const nlohmann::json::exception& e) {
      fail(number, std::string("malformed record: ") + e.what());
    } catch (const UsageError& e) {
      fail(number, e.what());
    }
  }
  return data;
}

PairDataset load_pairs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("file not found: " + path.string());
  return parse_pairs(in);
}

}  // namespace argtree

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

#include "argtree/features/feature_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "argtree/common/error.hpp"
#include "argtree/common/rng.hpp"

namespace argtree {

namespace {
constexpr std::string_view kSchema = "argtree-features/1";
}

FeatureSchema FeatureSchema::make(Task task, const std::string& label, std::vector<std::string> sparse_names,
                                  std::vector<std::string> dense_names) {
  FeatureSchema schema;
  schema.task = task;
  std::uint64_t h = hash_string(label);
  for (const auto& n : sparse_names) h = hash_string(n, h);
  h = hash_string("|", h);
  for (const auto& n : dense_names) h = hash_string(n, h);
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(h));
  schema.tag = std::string(to_string(task)) + ":" + label + ":" + hex;
  schema.sparse_names = std::move(sparse_names);
  schema.dense_names = std::move(dense_names);
  return schema;
}

std::string format_features(const FeatureDataset& data) {
  std::ostringstream out;
  nlohmann::ordered_json header;
  header["schema"] = kSchema;
  header["task"] = to_string(data.schema.task);
  header["tag"] = data.schema.tag;
  header["dense_names"] = data.schema.dense_names;
  header["sparse_names"] = data.schema.sparse_names;
  out << header.dump() << '\n';
  for (const auto& row : data.rows) {
    nlohmann::ordered_json j;
    j["topic_id"] = row.topic_id;
    j["distance"] = row.distance;
    j["same_stance"] = row.same_stance ? nlohmann::ordered_json(*row.same_stance) : nlohmann::ordered_json("n/a");
    j["label"] = row.label;
    auto& sparse = j["sparse"] = nlohmann::ordered_json::array();
    for (const auto& [i, v] : row.features.sparse) sparse.push_back({i, v});
    auto& dense = j["dense"] = nlohmann::ordered_json::array();
    for (const auto& [name, v] : row.features.dense) dense.push_back(v);
    out << j.dump() << '\n';
  }
  return out.str();
}

FeatureDataset parse_features(std::istream& in) {
  FeatureDataset data;
  std::string line;
  std::size_t number = 0;
  try {
    if (!std::getline(in, line)) throw DataError("feature file is empty");
    ++number;
    auto header = nlohmann::json::parse(line);
    if (header.at("schema").get<std::string>() != kSchema) throw DataError("feature file: schema-version mismatch");
    data.schema.task = parse_task(header.at("task").get<std::string>());
    data.schema.tag = header.at("tag").get<std::string>();
    data.schema.dense_names = header.at("dense_names").get<std::vector<std::string>>();
    data.schema.sparse_names = header.at("sparse_names").get<std::vector<std::string>>();
    while (std::getline(in, line)) {
      ++number;
      if (line.empty()) continue;
      auto j = nlohmann::json::parse(line);
      FeatureRow row;
      row.topic_id = j.at("topic_id").get<std::string>();
      row.distance = j.at("distance").get<int>();
      if (j.at("same_stance").is_boolean()) row.same_stance = j.at("same_stance").get<bool>();
      row.label = j.at("label").get<int>();
      for (const auto& entry : j.at("sparse")) {
        const auto index = entry.at(0).get<std::size_t>();
        if (index >= data.schema.sparse_names.size()) throw DataError("sparse index out of range");
        row.features.sparse[index] = entry.at(1).get<double>();
      }
      const auto& dense = j.at("dense");
      if (dense.size() != data.schema.dense_names.size()) throw DataError("dense width does not match header");
      for (std::size_t i = 0; i < dense.size(); ++i) row.features.add_dense(data.schema.dense_names[i], dense[i].get<double>());
      data.rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError("feature line " + std::to_string(number) + ": malformed record: " + e.what());
  } catch (const DataError& e) {
    throw DataError("feature line " + std::to_string(number) + ": " + e.what());
  }
  return data;
}

FeatureDataset load_features(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("file not found: " + path.string());
  return parse_features(in);
}

}  // namespace argtree

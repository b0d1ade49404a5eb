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
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "argtree/models/baselines.hpp"
#include "argtree/models/kind.hpp"
#include "argtree/models/logreg.hpp"
#include "argtree/models/neural.hpp"
#include "argtree/models/parameters.hpp"
#include "argtree/pairs/examples.hpp"

namespace argtree {

// Text checkpoint:
//
//   argtree-model/1 <kind> <seed>
//   [block <name> <rows> <cols>]
//   <one row of shortest round-trip decimals per line>
//   ...
//   [meta]
//   key = value
//
// Numbers round-trip bit-exactly.
struct Checkpoint {
  ModelKind kind = ModelKind::Majority;
  std::uint64_t seed = 0;
  std::vector<ParamBlock> blocks;
  std::vector<std::pair<std::string, std::string>> meta;

  void set(const std::string& key, const std::string& value);
  std::optional<std::string> get(const std::string& key) const;
  // Throws DataError when the key is missing.
  const std::string& require(const std::string& key) const;
  const ParamBlock& block(const std::string& name) const;

  bool operator==(const Checkpoint&) const = default;
};

std::string format_checkpoint(const Checkpoint& checkpoint);
Checkpoint parse_checkpoint(const std::string& text);
Checkpoint load_checkpoint(const std::filesystem::path& path);

struct LengthModel {};

using AnyModel = std::variant<MajorityModel, LengthModel, LogRegModel, NeuralModel>;

struct TrainedModel {
  Task task = Task::Specificity;
  std::uint64_t seed = 0;
  AnyModel model;
  std::vector<std::pair<std::string, std::string>> metadata;  // training record
};

Checkpoint to_checkpoint(const TrainedModel& model);
TrainedModel from_checkpoint(const Checkpoint& checkpoint);
ModelKind kind_of(const AnyModel& model);

}  // namespace argtree

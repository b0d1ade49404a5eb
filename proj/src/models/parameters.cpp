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

#include "argtree/models/parameters.hpp"

namespace argtree {

std::size_t ParamSet::add(std::string name, Eigen::Index rows, Eigen::Index cols) {
  blocks_.push_back({std::move(name), Eigen::MatrixXd::Zero(rows, cols)});
  return blocks_.size() - 1;
}

std::optional<std::size_t> ParamSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].name == name) return i;
  }
  return std::nullopt;
}

Eigen::Index ParamSet::total_size() const {
  Eigen::Index n = 0;
  for (const auto& b : blocks_) n += b.value.size();
  return n;
}

ParamSet ParamSet::zeros_like() const {
  ParamSet out;
  for (const auto& b : blocks_) out.add(b.name, b.value.rows(), b.value.cols());
  return out;
}

void ParamSet::set_zero() {
  for (auto& b : blocks_) b.value.setZero();
}

bool ParamSet::all_finite() const {
  for (const auto& b : blocks_) {
    if (!b.value.allFinite()) return false;
  }
  return true;
}

}  // namespace argtree

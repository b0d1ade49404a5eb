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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace argtree {

struct ParamBlock {
  std::string name;
  Eigen::MatrixXd value;

  bool operator==(const ParamBlock& other) const {
    return name == other.name && value.rows() == other.value.rows() && value.cols() == other.value.cols() &&
           value == other.value;
  }
};

// Ordered, named parameter blocks. Vectors are stored as n x 1 blocks.
class ParamSet {
 public:
  std::size_t add(std::string name, Eigen::Index rows, Eigen::Index cols);

  Eigen::MatrixXd& operator[](std::size_t i) { return blocks_[i].value; }
  const Eigen::MatrixXd& operator[](std::size_t i) const { return blocks_[i].value; }

  std::size_t count() const { return blocks_.size(); }
  const std::string& name(std::size_t i) const { return blocks_[i].name; }
  std::optional<std::size_t> find(std::string_view name) const;
  Eigen::Index total_size() const;

  ParamSet zeros_like() const;
  void set_zero();
  bool all_finite() const;

  std::vector<ParamBlock>& blocks() { return blocks_; }
  const std::vector<ParamBlock>& blocks() const { return blocks_; }

  bool operator==(const ParamSet&) const = default;

 private:
  std::vector<ParamBlock> blocks_;
};

}  // namespace argtree

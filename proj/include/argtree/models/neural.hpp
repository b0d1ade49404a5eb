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
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "argtree/models/kind.hpp"
#include "argtree/models/parameters.hpp"
#include "argtree/pairs/examples.hpp"

namespace argtree {

struct NeuralConfig {
  int dim = 64;          // token/segment embedding and pair-representation width
  int hidden = 128;      // GRU units per direction
  int max_tokens = 64;   // per-claim truncation
  bool top_down = true;  // hierarchical model: feed pairs from A downwards

  bool operator==(const NeuralConfig&) const = default;
};

// Token ids per claim. Pair models read {first, second}; path models read
// the claims from A (ancestor) down to B.
struct NeuralExample {
  std::vector<std::vector<int>> texts;
  int label = 0;  // 1 = positive class
};

struct PackedSequence {
  std::vector<int> ids;
  std::vector<int> segments;
};

// Reserved token ids. PAD never appears as padding (sequences are pooled one
// at a time); it stands in for tokens outside the model vocabulary.
inline constexpr int kPadId = 0;
inline constexpr int kClsId = 1;
inline constexpr int kSepId = 2;
inline constexpr int kFirstWordId = 3;

// [CLS] a [SEP] b [SEP]; segment 0 up to and including the first [SEP].
PackedSequence pack_pair(std::span<const int> a, std::span<const int> b);

// [CLS] B [SEP] c_k [SEP] ... [SEP] A [SEP] for a path given A-first; the
// CLS + B block is segment 0, everything after it segment 1.
PackedSequence pack_path_flat(const std::vector<std::vector<int>>& path);

// Mean-pooled pair encoder with a tanh head, optionally followed by a
// bidirectional GRU over pair representations (PathHier), and a linear
// two-way classifier.
class NeuralModel {
 public:
  // Seeded initialization: embeddings uniform in +-3, other weights in
  // +-1/sqrt(fan-in), zero biases.
  NeuralModel(ModelKind kind, std::vector<std::string> vocabulary, NeuralConfig config, std::uint64_t seed);
  // Restores trained parameters; throws DataError when block shapes do not
  // match the kind, vocabulary and config.
  NeuralModel(ModelKind kind, std::vector<std::string> vocabulary, NeuralConfig config, ParamSet params);

  ModelKind kind() const { return kind_; }
  const NeuralConfig& config() const { return config_; }
  const std::vector<std::string>& vocabulary() const { return vocabulary_; }
  ParamSet& params() { return params_; }
  const ParamSet& params() const { return params_; }

  // Canonical tokens mapped to ids, truncated to max_tokens.
  std::vector<int> token_ids(std::string_view text) const;
  NeuralExample make_example(const SpecificityExample& example) const;
  NeuralExample make_example(const StanceExample& example) const;

  Eigen::VectorXd encode_pair(std::span<const int> a, std::span<const int> b) const;
  Eigen::VectorXd encode_path_flat(const std::vector<std::vector<int>>& path) const;
  // Concatenated [forward state at the last pair; backward state at the
  // first pair], 2 * hidden values. Only valid for PathHier.
  Eigen::VectorXd encode_path_hierarchical(const std::vector<std::vector<int>>& path) const;

  Eigen::Vector2d logits(const NeuralExample& example) const;
  // 1 iff logit[1] >= logit[0].
  int predict(const NeuralExample& example) const;

  // Mean cross-entropy over `batch` plus (l2 / 2) * ||theta||^2. When `grad`
  // is non-null its gradient is added into it.
  double objective(std::span<const NeuralExample> batch, double l2, ParamSet* grad) const;

 private:
  struct EncoderCache;
  struct GruCache;
  struct Blocks;

  void build_blocks();
  void check_path(const NeuralExample& example) const;
  std::vector<std::vector<int>> hier_pairs_order(const std::vector<std::vector<int>>& path) const;

  Eigen::VectorXd encoder_forward(const PackedSequence& seq, EncoderCache* cache) const;
  void encoder_backward(const EncoderCache& cache, const Eigen::VectorXd& d_out, ParamSet& grad) const;
  Eigen::VectorXd gru_forward(int direction, const std::vector<Eigen::VectorXd>& inputs, GruCache* cache) const;
  void gru_backward(int direction, const GruCache& cache, const Eigen::VectorXd& d_final, ParamSet& grad,
                    std::vector<Eigen::VectorXd>& d_inputs) const;

  // Forward pass; with `grad` also backpropagates the example's cross-entropy
  // scaled by `scale`. Returns the unscaled loss.
  double forward_backward(const NeuralExample& example, ParamSet* grad, double scale, Eigen::Vector2d* logits) const;

  ModelKind kind_;
  std::vector<std::string> vocabulary_;
  std::unordered_map<std::string, int> ids_;
  NeuralConfig config_;
  ParamSet params_;

  // Block indices into params_.
  std::size_t token_embedding_ = 0, segment_embedding_ = 0, pair_weight_ = 0, pair_bias_ = 0;
  std::size_t gru_[2][9] = {};
  std::size_t classifier_weight_ = 0, classifier_bias_ = 0;
};

}  // namespace argtree

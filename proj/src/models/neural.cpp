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

#include "argtree/models/neural.hpp"

#include <algorithm>
#include <cmath>

#include "argtree/common/error.hpp"
#include "argtree/common/rng.hpp"
#include "argtree/corpus/text.hpp"

namespace argtree {

PackedSequence pack_pair(std::span<const int> a, std::span<const int> b) {
  PackedSequence seq;
  seq.ids.reserve(a.size() + b.size() + 3);
  seq.ids.push_back(kClsId);
  seq.ids.insert(seq.ids.end(), a.begin(), a.end());
  seq.ids.push_back(kSepId);
  seq.segments.assign(seq.ids.size(), 0);
  seq.ids.insert(seq.ids.end(), b.begin(), b.end());
  seq.ids.push_back(kSepId);
  seq.segments.resize(seq.ids.size(), 1);
  return seq;
}

PackedSequence pack_path_flat(const std::vector<std::vector<int>>& path) {
  if (path.size() < 2) throw DataError("path needs at least two claims");
  PackedSequence seq;
  seq.ids.push_back(kClsId);
  seq.ids.insert(seq.ids.end(), path.back().begin(), path.back().end());
  seq.ids.push_back(kSepId);
  seq.segments.assign(seq.ids.size(), 0);
  for (std::size_t i = path.size() - 1; i-- > 0;) {
    seq.ids.insert(seq.ids.end(), path[i].begin(), path[i].end());
    seq.ids.push_back(kSepId);
  }
  seq.segments.resize(seq.ids.size(), 1);
  return seq;
}

struct NeuralModel::EncoderCache {
  PackedSequence seq;
  Eigen::VectorXd pool;
  Eigen::VectorXd out;
};

struct NeuralModel::GruCache {
  std::vector<Eigen::VectorXd> x, h_prev, z, r, cand, rh;
};

namespace {

constexpr double kEmbeddingInit = 3.0;

enum GruBlock { Wz, Uz, Bz, Wr, Ur, Br, Wh, Uh, Bh };

Eigen::VectorXd logistic(const Eigen::VectorXd& v) { return (1.0 + (-v.array()).exp()).inverse().matrix(); }

}  // namespace

void NeuralModel::build_blocks() {
  const int d = config_.dim, h = config_.hidden;
  const auto v = static_cast<Eigen::Index>(vocabulary_.size()) + kFirstWordId;
  params_ = ParamSet();
  token_embedding_ = params_.add("token_embedding", v, d);
  segment_embedding_ = params_.add("segment_embedding", 2, d);
  pair_weight_ = params_.add("pair_weight", d, d);
  pair_bias_ = params_.add("pair_bias", d, 1);
  Eigen::Index classifier_in = d;
  if (kind_ == ModelKind::PathHier) {
    static const char* names[9] = {"w_z", "u_z", "b_z", "w_r", "u_r", "b_r", "w_h", "u_h", "b_h"};
    for (int dir = 0; dir < 2; ++dir) {
      const std::string prefix = dir == 0 ? "gru_fwd_" : "gru_bwd_";
      for (int k = 0; k < 9; ++k) {
        const int kind = k % 3;  // 0 = input matrix, 1 = recurrent matrix, 2 = bias
        gru_[dir][k] = params_.add(prefix + names[k], h, kind == 0 ? d : kind == 1 ? h : 1);
      }
    }
    classifier_in = 2 * h;
  }
  classifier_weight_ = params_.add("classifier_weight", 2, classifier_in);
  classifier_bias_ = params_.add("classifier_bias", 2, 1);
}

NeuralModel::NeuralModel(ModelKind kind, std::vector<std::string> vocabulary, NeuralConfig config, std::uint64_t seed)
    : kind_(kind), vocabulary_(std::move(vocabulary)), config_(config) {
  if (!is_neural(kind)) throw UsageError("not a neural model kind: " + std::string(to_string(kind)));
  if (config_.dim <= 0 || config_.hidden <= 0 || config_.max_tokens <= 0) {
    throw UsageError("neural dimensions must be positive");
  }
  for (std::size_t i = 0; i < vocabulary_.size(); ++i) ids_.emplace(vocabulary_[i], static_cast<int>(i) + kFirstWordId);
  build_blocks();
  Rng rng(seed);
  for (auto& block : params_.blocks()) {
    if (block.value.cols() == 1) continue;  // biases start at zero
    // Wide embeddings: a single repeated word has to move the mean pool far enough to saturate tanh.
    const bool embedding = block.name.ends_with("embedding");
    const double bound = embedding ? kEmbeddingInit : 1.0 / std::sqrt(static_cast<double>(block.value.cols()));
    for (Eigen::Index c = 0; c < block.value.cols(); ++c) {
      for (Eigen::Index r = 0; r < block.value.rows(); ++r) block.value(r, c) = rng.uniform(-bound, bound);
    }
  }
}

NeuralModel::NeuralModel(ModelKind kind, std::vector<std::string> vocabulary, NeuralConfig config, ParamSet params)
    : kind_(kind), vocabulary_(std::move(vocabulary)), config_(config) {
  if (!is_neural(kind)) throw UsageError("not a neural model kind: " + std::string(to_string(kind)));
  for (std::size_t i = 0; i < vocabulary_.size(); ++i) ids_.emplace(vocabulary_[i], static_cast<int>(i) + kFirstWordId);
  build_blocks();
  if (params.count() != params_.count()) {
    throw DataError("checkpoint has " + std::to_string(params.count()) + " parameter blocks, " +
                    std::string(to_string(kind)) + " needs " + std::to_string(params_.count()));
  }
  for (std::size_t i = 0; i < params_.count(); ++i) {
    const auto& want = params_.blocks()[i];
    const auto& got = params.blocks()[i];
    if (got.name != want.name || got.value.rows() != want.value.rows() || got.value.cols() != want.value.cols()) {
      throw DataError("parameter block '" + got.name + "' " + std::to_string(got.value.rows()) + "x" +
                      std::to_string(got.value.cols()) + " does not match expected '" + want.name + "' " +
                      std::to_string(want.value.rows()) + "x" + std::to_string(want.value.cols()));
    }
  }
  if (!params.all_finite()) throw DataError("parameters contain non-finite values");
  params_ = std::move(params);
}

std::vector<int> NeuralModel::token_ids(std::string_view text) const {
  std::vector<int> out;
  for (const auto& tok : tokenize(text)) {
    if (out.size() >= static_cast<std::size_t>(config_.max_tokens)) break;
    auto it = ids_.find(tok);
    out.push_back(it == ids_.end() ? kPadId : it->second);
  }
  return out;
}

NeuralExample NeuralModel::make_example(const SpecificityExample& example) const {
  if (kind_ != ModelKind::Pair) {
    throw UsageError(std::string(to_string(kind_)) + " is a stance-only model; use pair for specificity");
  }
  return {{token_ids(example.first_text), token_ids(example.second_text)}, binary_label(example.label)};
}

NeuralExample NeuralModel::make_example(const StanceExample& example) const {
  if (example.path_texts.size() < 2) throw DataError("stance example path needs at least two claims");
  NeuralExample out;
  out.label = binary_label(example.label);
  if (kind_ == ModelKind::Pair) {
    out.texts = {token_ids(example.path_texts.front()), token_ids(example.path_texts.back())};
  } else {
    for (const auto& t : example.path_texts) out.texts.push_back(token_ids(t));
  }
  return out;
}

Eigen::VectorXd NeuralModel::encoder_forward(const PackedSequence& seq, EncoderCache* cache) const {
  const auto& emb = params_[token_embedding_];
  const auto& seg = params_[segment_embedding_];
  const auto vocab_rows = emb.rows();
  Eigen::VectorXd pool = Eigen::VectorXd::Zero(config_.dim);
  int seg_count[2] = {0, 0};
  for (std::size_t i = 0; i < seq.ids.size(); ++i) {
    const int id = seq.ids[i];
    if (id < 0 || id >= vocab_rows) throw DataError("token id " + std::to_string(id) + " outside the embedding table");
    pool += emb.row(id).transpose();
    ++seg_count[seq.segments[i]];
  }
  pool += static_cast<double>(seg_count[0]) * seg.row(0).transpose() +
          static_cast<double>(seg_count[1]) * seg.row(1).transpose();
  pool /= static_cast<double>(seq.ids.size());
  Eigen::VectorXd out = (params_[pair_weight_] * pool + params_[pair_bias_]).array().tanh().matrix();
  if (cache) {
    cache->seq = seq;
    cache->pool = pool;
    cache->out = out;
  }
  return out;
}

void NeuralModel::encoder_backward(const EncoderCache& cache, const Eigen::VectorXd& d_out, ParamSet& grad) const {
  const Eigen::VectorXd d_pre = d_out.cwiseProduct((1.0 - cache.out.array().square()).matrix());
  grad[pair_weight_].noalias() += d_pre * cache.pool.transpose();
  grad[pair_bias_] += d_pre;
  const Eigen::VectorXd d_pool = params_[pair_weight_].transpose() * d_pre / static_cast<double>(cache.seq.ids.size());
  auto& d_emb = grad[token_embedding_];
  int seg_count[2] = {0, 0};
  for (std::size_t i = 0; i < cache.seq.ids.size(); ++i) {
    d_emb.row(cache.seq.ids[i]) += d_pool.transpose();
    ++seg_count[cache.seq.segments[i]];
  }
  grad[segment_embedding_].row(0) += static_cast<double>(seg_count[0]) * d_pool.transpose();
  grad[segment_embedding_].row(1) += static_cast<double>(seg_count[1]) * d_pool.transpose();
}

Eigen::VectorXd NeuralModel::encode_pair(std::span<const int> a, std::span<const int> b) const {
  return encoder_forward(pack_pair(a, b), nullptr);
}

Eigen::VectorXd NeuralModel::encode_path_flat(const std::vector<std::vector<int>>& path) const {
  return encoder_forward(pack_path_flat(path), nullptr);
}

Eigen::VectorXd NeuralModel::gru_forward(int direction, const std::vector<Eigen::VectorXd>& inputs,
                                         GruCache* cache) const {
  const auto* g = gru_[direction];
  const auto& P = params_;
  Eigen::VectorXd h = Eigen::VectorXd::Zero(config_.hidden);
  const std::size_t k = inputs.size();
  for (std::size_t step = 0; step < k; ++step) {
    const Eigen::VectorXd& x = inputs[direction == 0 ? step : k - 1 - step];
    Eigen::VectorXd z = logistic(P[g[Wz]] * x + P[g[Uz]] * h + P[g[Bz]]);
    Eigen::VectorXd r = logistic(P[g[Wr]] * x + P[g[Ur]] * h + P[g[Br]]);
    Eigen::VectorXd rh = r.cwiseProduct(h);
    Eigen::VectorXd cand = (P[g[Wh]] * x + P[g[Uh]] * rh + P[g[Bh]]).array().tanh().matrix();
    Eigen::VectorXd next = h + z.cwiseProduct(cand - h);
    if (cache) {
      cache->x.push_back(x);
      cache->h_prev.push_back(h);
      cache->z.push_back(std::move(z));
      cache->r.push_back(std::move(r));
      cache->cand.push_back(std::move(cand));
      cache->rh.push_back(std::move(rh));
    }
    h = std::move(next);
  }
  return h;
}

void NeuralModel::gru_backward(int direction, const GruCache& cache, const Eigen::VectorXd& d_final, ParamSet& grad,
                               std::vector<Eigen::VectorXd>& d_inputs) const {
  const auto* g = gru_[direction];
  const auto& P = params_;
  const std::size_t k = cache.x.size();
  Eigen::VectorXd dh = d_final;
  for (std::size_t step = k; step-- > 0;) {
    const auto& hp = cache.h_prev[step];
    const auto& z = cache.z[step];
    const auto& r = cache.r[step];
    const auto& cand = cache.cand[step];
    const auto& x = cache.x[step];

    Eigen::VectorXd d_cand_pre = dh.cwiseProduct(z).cwiseProduct((1.0 - cand.array().square()).matrix());
    Eigen::VectorXd d_z_pre =
        dh.cwiseProduct(cand - hp).cwiseProduct((z.array() * (1.0 - z.array())).matrix());
    Eigen::VectorXd d_rh = P[g[Uh]].transpose() * d_cand_pre;
    Eigen::VectorXd d_r_pre = d_rh.cwiseProduct(hp).cwiseProduct((r.array() * (1.0 - r.array())).matrix());

    grad[g[Wh]].noalias() += d_cand_pre * x.transpose();
    grad[g[Uh]].noalias() += d_cand_pre * cache.rh[step].transpose();
    grad[g[Bh]] += d_cand_pre;
    grad[g[Wz]].noalias() += d_z_pre * x.transpose();
    grad[g[Uz]].noalias() += d_z_pre * hp.transpose();
    grad[g[Bz]] += d_z_pre;
    grad[g[Wr]].noalias() += d_r_pre * x.transpose();
    grad[g[Ur]].noalias() += d_r_pre * hp.transpose();
    grad[g[Br]] += d_r_pre;

    const std::size_t input_index = direction == 0 ? step : k - 1 - step;
    d_inputs[input_index].noalias() += P[g[Wz]].transpose() * d_z_pre;
    d_inputs[input_index].noalias() += P[g[Wr]].transpose() * d_r_pre;
    d_inputs[input_index].noalias() += P[g[Wh]].transpose() * d_cand_pre;

    Eigen::VectorXd d_prev = dh.cwiseProduct((1.0 - z.array()).matrix()) + d_rh.cwiseProduct(r);
    d_prev.noalias() += P[g[Uz]].transpose() * d_z_pre;
    d_prev.noalias() += P[g[Ur]].transpose() * d_r_pre;
    dh = std::move(d_prev);
  }
}

std::vector<std::vector<int>> NeuralModel::hier_pairs_order(const std::vector<std::vector<int>>& path) const {
  // Indices of the parent claim of each adjacent pair, in GRU input order.
  std::vector<std::vector<int>> order;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) order.push_back({static_cast<int>(i)});
  if (!config_.top_down) std::reverse(order.begin(), order.end());
  return order;
}

Eigen::VectorXd NeuralModel::encode_path_hierarchical(const std::vector<std::vector<int>>& path) const {
  if (kind_ != ModelKind::PathHier) throw UsageError("encode_path_hierarchical needs a path-hier model");
  if (path.size() < 2) throw DataError("path needs at least two claims");
  std::vector<Eigen::VectorXd> reps;
  for (const auto& p : hier_pairs_order(path)) {
    const auto i = static_cast<std::size_t>(p[0]);
    reps.push_back(encode_pair(path[i], path[i + 1]));
  }
  Eigen::VectorXd out(2 * config_.hidden);
  out << gru_forward(0, reps, nullptr), gru_forward(1, reps, nullptr);
  return out;
}

void NeuralModel::check_path(const NeuralExample& example) const {
  if (kind_ == ModelKind::Pair) {
    if (example.texts.size() != 2) throw DataError("pair model expects exactly two claims per example");
  } else if (example.texts.size() < 2) {
    throw DataError("path needs at least two claims");
  }
}

double NeuralModel::forward_backward(const NeuralExample& example, ParamSet* grad, double scale,
                                     Eigen::Vector2d* logits_out) const {
  check_path(example);
  if (example.label != 0 && example.label != 1) throw DataError("example label must be 0 or 1");
  Eigen::VectorXd features;
  std::vector<EncoderCache> enc;
  GruCache gru_cache[2];
  if (kind_ == ModelKind::PathHier) {
    const auto order = hier_pairs_order(example.texts);
    enc.resize(order.size());
    std::vector<Eigen::VectorXd> reps;
    for (std::size_t t = 0; t < order.size(); ++t) {
      const auto i = static_cast<std::size_t>(order[t][0]);
      reps.push_back(encoder_forward(pack_pair(example.texts[i], example.texts[i + 1]), &enc[t]));
    }
    features.resize(2 * config_.hidden);
    features << gru_forward(0, reps, grad ? &gru_cache[0] : nullptr), gru_forward(1, reps, grad ? &gru_cache[1] : nullptr);
  } else {
    enc.resize(1);
    const PackedSequence seq = kind_ == ModelKind::Pair ? pack_pair(example.texts[0], example.texts[1])
                                                        : pack_path_flat(example.texts);
    features = encoder_forward(seq, &enc[0]);
  }
  const Eigen::Vector2d logits = params_[classifier_weight_] * features + params_[classifier_bias_];
  if (logits_out) *logits_out = logits;
  const double m = logits.maxCoeff();
  const Eigen::Vector2d e = (logits.array() - m).exp();
  const double log_sum = m + std::log(e.sum());
  const double loss = log_sum - logits[example.label];
  if (!grad) return loss;

  Eigen::Vector2d d_logits = e / e.sum();
  d_logits[example.label] -= 1.0;
  d_logits *= scale;
  ParamSet& G = *grad;
  G[classifier_weight_].noalias() += d_logits * features.transpose();
  G[classifier_bias_] += d_logits;
  const Eigen::VectorXd d_features = params_[classifier_weight_].transpose() * d_logits;
  if (kind_ == ModelKind::PathHier) {
    const auto h = config_.hidden;
    std::vector<Eigen::VectorXd> d_reps(enc.size(), Eigen::VectorXd::Zero(config_.dim));
    gru_backward(0, gru_cache[0], d_features.head(h), G, d_reps);
    gru_backward(1, gru_cache[1], d_features.tail(h), G, d_reps);
    for (std::size_t t = 0; t < enc.size(); ++t) encoder_backward(enc[t], d_reps[t], G);
  } else {
    encoder_backward(enc[0], d_features, G);
  }
  return loss;
}

Eigen::Vector2d NeuralModel::logits(const NeuralExample& example) const {
  Eigen::Vector2d out;
  forward_backward(example, nullptr, 0.0, &out);
  return out;
}

int NeuralModel::predict(const NeuralExample& example) const {
  const Eigen::Vector2d l = logits(example);
  return l[1] >= l[0] ? 1 : 0;
}

double NeuralModel::objective(std::span<const NeuralExample> batch, double l2, ParamSet* grad) const {
  if (batch.empty()) throw DataError("empty batch");
  const double scale = 1.0 / static_cast<double>(batch.size());
  double loss = 0.0;
  for (const auto& ex : batch) loss += forward_backward(ex, grad, scale, nullptr);
  loss *= scale;
  double norm = 0.0;
  for (std::size_t i = 0; i < params_.count(); ++i) norm += params_[i].squaredNorm();
  if (grad && l2 > 0.0) {
    for (std::size_t i = 0; i < params_.count(); ++i) (*grad)[i] += l2 * params_[i];
  }
  return loss + 0.5 * l2 * norm;
}

}  // namespace argtree

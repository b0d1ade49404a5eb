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

#include "argtree/models/checkpoint.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "argtree/common/error.hpp"
#include "argtree/common/files.hpp"
#include "argtree/common/format.hpp"
#include "argtree/corpus/text.hpp"

namespace argtree {

namespace {

constexpr std::string_view kHeader = "argtree-model/1";

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (w.empty() || w.find_first_of(" \t\r\n") != std::string::npos) {
      throw DataError("cannot store name '" + w + "' in a checkpoint");
    }
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

Eigen::MatrixXd column(const Eigen::VectorXd& v) { return v; }

}  // namespace

void Checkpoint::set(const std::string& key, const std::string& value) {
  if (key.empty() || key.find_first_of("= \t\r\n") != std::string::npos) {
    throw DataError("invalid checkpoint metadata key '" + key + "'");
  }
  if (value.find_first_of("\r\n") != std::string::npos) {
    throw DataError("checkpoint metadata value for '" + key + "' spans lines");
  }
  for (auto& [k, v] : meta) {
    if (k == key) {
      v = value;
      return;
    }
  }
  meta.emplace_back(key, value);
}

std::optional<std::string> Checkpoint::get(const std::string& key) const {
  for (const auto& [k, v] : meta) {
    if (k == key) return v;
  }
  return std::nullopt;
}

const std::string& Checkpoint::require(const std::string& key) const {
  for (const auto& [k, v] : meta) {
    if (k == key) return v;
  }
  throw DataError("checkpoint is missing metadata key '" + key + "'");
}

const ParamBlock& Checkpoint::block(const std::string& name) const {
  for (const auto& b : blocks) {
    if (b.name == name) return b;
  }
  throw DataError("checkpoint is missing parameter block '" + name + "'");
}

std::string format_checkpoint(const Checkpoint& checkpoint) {
  std::string out;
  out += std::string(kHeader) + " " + std::string(to_string(checkpoint.kind)) + " " +
         std::to_string(checkpoint.seed) + "\n";
  for (const auto& b : checkpoint.blocks) {
    out += "[block " + b.name + " " + std::to_string(b.value.rows()) + " " + std::to_string(b.value.cols()) + "]\n";
    for (Eigen::Index r = 0; r < b.value.rows(); ++r) {
      for (Eigen::Index c = 0; c < b.value.cols(); ++c) {
        if (c) out += ' ';
        out += format_double(b.value(r, c));
      }
      out += '\n';
    }
  }
  out += "[meta]\n";
  for (const auto& [k, v] : checkpoint.meta) out += k + " = " + v + "\n";
  return out;
}

Checkpoint parse_checkpoint(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(std::move(line));
    }
  }
  auto fail = [](std::size_t line_no, const std::string& msg) -> DataError {
    return DataError("checkpoint line " + std::to_string(line_no) + ": " + msg);
  };
  if (lines.empty()) throw DataError("checkpoint is empty");
  Checkpoint cp;
  {
    auto head = split_words(lines[0]);
    if (head.empty() || head[0].rfind("argtree-model/", 0) != 0) throw fail(1, "not an argtree model checkpoint");
    if (head[0] != kHeader) throw fail(1, "unsupported checkpoint version '" + head[0] + "'");
    if (head.size() != 3) throw fail(1, "expected '" + std::string(kHeader) + " <kind> <seed>'");
    try {
      cp.kind = parse_model_kind(head[1]);
    } catch (const UsageError& e) {
      throw fail(1, e.what());
    }
    const auto seed = parse_int(head[2], "checkpoint seed");
    if (seed < 0) throw fail(1, "negative seed");
    cp.seed = static_cast<std::uint64_t>(seed);
  }
  std::size_t i = 1;
  bool saw_meta = false;
  std::set<std::string> names;
  while (i < lines.size()) {
    const std::string& line = lines[i];
    const std::size_t line_no = i + 1;
    if (line.empty()) {
      ++i;
      continue;
    }
    if (line == "[meta]") {
      saw_meta = true;
      ++i;
      break;
    }
    if (line.rfind("[block ", 0) != 0 || line.back() != ']') throw fail(line_no, "expected a [block ...] header");
    auto words = split_words(std::string_view(line).substr(7, line.size() - 8));
    if (words.size() != 3) throw fail(line_no, "expected [block <name> <rows> <cols>]");
    const auto rows = parse_int(words[1], "block rows");
    const auto cols = parse_int(words[2], "block cols");
    if (rows < 0 || cols < 0) throw fail(line_no, "negative block shape");
    if (!names.insert(words[0]).second) throw fail(line_no, "duplicate block '" + words[0] + "'");
    ParamBlock block{words[0], Eigen::MatrixXd(rows, cols)};
    ++i;
    for (Eigen::Index r = 0; r < rows; ++r, ++i) {
      if (i >= lines.size()) throw fail(i + 1, "block '" + block.name + "' is truncated");
      auto values = split_words(lines[i]);
      if (static_cast<long long>(values.size()) != cols) {
        throw fail(i + 1, "block '" + block.name + "' row has " + std::to_string(values.size()) + " values, expected " +
                              std::to_string(cols));
      }
      for (Eigen::Index c = 0; c < cols; ++c) {
        try {
          block.value(r, c) = parse_double(values[static_cast<std::size_t>(c)], "block value");
        } catch (const DataError& e) {
          throw fail(i + 1, e.what());
        }
      }
    }
    cp.blocks.push_back(std::move(block));
  }
  if (!saw_meta) throw DataError("checkpoint has no [meta] section");
  for (; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw fail(i + 1, "expected 'key = value'");
    std::string key(trim(std::string_view(line).substr(0, eq)));
    std::string value = line.substr(eq + 1);
    if (!value.empty() && value.front() == ' ') value.erase(0, 1);
    if (cp.get(key)) throw fail(i + 1, "duplicate metadata key '" + key + "'");
    cp.set(key, value);
  }
  return cp;
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return parse_checkpoint(text);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

ModelKind kind_of(const AnyModel& model) {
  if (std::holds_alternative<MajorityModel>(model)) return ModelKind::Majority;
  if (std::holds_alternative<LengthModel>(model)) return ModelKind::Length;
  if (std::holds_alternative<LogRegModel>(model)) return ModelKind::LogReg;
  return std::get<NeuralModel>(model).kind();
}

namespace {

const std::set<std::string>& structural_keys(ModelKind kind) {
  static const std::set<std::string> base{"task"};
  static const std::set<std::string> majority{"task", "label"};
  static const std::set<std::string> logreg{"task", "schema_tag", "sparse_dim", "feature_names", "best_epoch",
                                            "dev_accuracy"};
  static const std::set<std::string> neural{"task", "dim", "hidden", "max_tokens", "top_down", "vocabulary"};
  switch (kind) {
    case ModelKind::Majority: return majority;
    case ModelKind::Length: return base;
    case ModelKind::LogReg: return logreg;
    default: return neural;
  }
}

}  // namespace

Checkpoint to_checkpoint(const TrainedModel& trained) {
  Checkpoint cp;
  cp.kind = kind_of(trained.model);
  cp.seed = trained.seed;
  cp.set("task", std::string(to_string(trained.task)));
  if (const auto* m = std::get_if<MajorityModel>(&trained.model)) {
    cp.set("label", std::to_string(m->label));
  } else if (const auto* lr = std::get_if<LogRegModel>(&trained.model)) {
    cp.blocks.push_back({"weights", column(lr->weights)});
    Eigen::MatrixXd bias(1, 1);
    bias(0, 0) = lr->bias;
    cp.blocks.push_back({"bias", bias});
    cp.blocks.push_back({"dense_mean", column(lr->dense_mean)});
    cp.blocks.push_back({"dense_scale", column(lr->dense_scale)});
    cp.set("schema_tag", lr->schema_tag);
    cp.set("sparse_dim", std::to_string(lr->sparse_dim));
    cp.set("feature_names", join_words(lr->feature_names));
    cp.set("best_epoch", std::to_string(lr->best_epoch));
    cp.set("dev_accuracy", format_double(lr->dev_accuracy));
  } else if (const auto* nn = std::get_if<NeuralModel>(&trained.model)) {
    cp.blocks = nn->params().blocks();
    cp.set("dim", std::to_string(nn->config().dim));
    cp.set("hidden", std::to_string(nn->config().hidden));
    cp.set("max_tokens", std::to_string(nn->config().max_tokens));
    cp.set("top_down", nn->config().top_down ? "true" : "false");
    cp.set("vocabulary", join_words(nn->vocabulary()));
  }
  const auto& reserved = structural_keys(cp.kind);
  for (const auto& [k, v] : trained.metadata) {
    if (reserved.count(k)) throw DataError("metadata key '" + k + "' is reserved");
    cp.set(k, v);
  }
  return cp;
}

TrainedModel from_checkpoint(const Checkpoint& cp) {
  TrainedModel out;
  out.seed = cp.seed;
  try {
    out.task = parse_task(cp.require("task"));
  } catch (const UsageError& e) {
    throw DataError(std::string("checkpoint: ") + e.what());
  }
  auto count = [&](const std::string& key) {
    const auto v = parse_int(cp.require(key), key);
    if (v < 0) throw DataError("checkpoint metadata '" + key + "' is negative");
    return static_cast<std::size_t>(v);
  };
  switch (cp.kind) {
    case ModelKind::Majority: {
      MajorityModel m;
      m.label = static_cast<int>(parse_int(cp.require("label"), "label"));
      if (m.label != 0 && m.label != 1) throw DataError("checkpoint majority label must be 0 or 1");
      out.model = m;
      break;
    }
    case ModelKind::Length:
      if (out.task != Task::Specificity) throw DataError("length baseline checkpoint must be for specificity");
      out.model = LengthModel{};
      break;
    case ModelKind::LogReg: {
      LogRegModel lr;
      lr.schema_tag = cp.require("schema_tag");
      lr.sparse_dim = count("sparse_dim");
      lr.feature_names = split_words(cp.require("feature_names"));
      lr.best_epoch = count("best_epoch");
      lr.dev_accuracy = parse_double(cp.require("dev_accuracy"), "dev_accuracy");
      const auto n = static_cast<Eigen::Index>(lr.feature_names.size());
      if (lr.sparse_dim > lr.feature_names.size()) throw DataError("checkpoint sparse_dim exceeds feature count");
      const auto dense = n - static_cast<Eigen::Index>(lr.sparse_dim);
      auto vec = [&](const std::string& name, Eigen::Index len) {
        const auto& b = cp.block(name);
        if (b.value.rows() != len || b.value.cols() != 1) {
          throw DataError("checkpoint block '" + name + "' has the wrong shape");
        }
        if (!b.value.allFinite()) throw DataError("checkpoint block '" + name + "' has non-finite values");
        return Eigen::VectorXd(b.value.col(0));
      };
      lr.weights = vec("weights", n);
      lr.bias = vec("bias", 1)[0];
      lr.dense_mean = vec("dense_mean", dense);
      lr.dense_scale = vec("dense_scale", dense);
      out.model = std::move(lr);
      break;
    }
    default: {
      NeuralConfig config;
      config.dim = static_cast<int>(count("dim"));
      config.hidden = static_cast<int>(count("hidden"));
      config.max_tokens = static_cast<int>(count("max_tokens"));
      const auto& td = cp.require("top_down");
      if (td != "true" && td != "false") throw DataError("checkpoint top_down must be true or false");
      config.top_down = td == "true";
      ParamSet params;
      for (const auto& b : cp.blocks) {
        params[params.add(b.name, b.value.rows(), b.value.cols())] = b.value;
      }
      if (cp.kind != ModelKind::Pair && out.task != Task::Stance) {
        throw DataError("path model checkpoint must be for stance");
      }
      out.model = NeuralModel(cp.kind, split_words(cp.require("vocabulary")), config, std::move(params));
      break;
    }
  }
  const auto& reserved = structural_keys(cp.kind);
  for (const auto& kv : cp.meta) {
    if (!reserved.count(kv.first)) out.metadata.push_back(kv);
  }
  return out;
}

}  // namespace argtree

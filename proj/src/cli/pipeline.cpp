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

#include "argtree/cli/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "argtree/common/error.hpp"
#include "argtree/common/format.hpp"
#include "argtree/common/rng.hpp"
#include "argtree/features/vocabulary.hpp"
#include "argtree/models/baselines.hpp"
#include "argtree/models/neural_train.hpp"

namespace argtree {

TrainOptions TrainOptions::from(ModelKind kind, const RunConfig& config, std::uint64_t seed) {
  TrainOptions o;
  o.train = is_neural(kind) ? TrainConfig::neural_defaults() : TrainConfig::logreg_defaults();
  o.train.learning_rate = config.real("learning_rate", o.train.learning_rate);
  o.train.l2 = config.real("l2", o.train.l2);
  auto positive = [&](const std::string& key, long long fallback) {
    const long long v = config.integer(key, fallback);
    if (v <= 0) throw UsageError(key + " must be positive");
    return v;
  };
  auto non_negative = [&](const std::string& key, long long fallback) {
    const long long v = config.integer(key, fallback);
    if (v < 0) throw UsageError(key + " must be non-negative");
    return v;
  };
  o.train.batch_size = static_cast<std::size_t>(positive("batch_size", static_cast<long long>(o.train.batch_size)));
  o.train.max_epochs = static_cast<std::size_t>(positive("max_epochs", static_cast<long long>(o.train.max_epochs)));
  o.train.patience = static_cast<std::size_t>(positive("patience", static_cast<long long>(o.train.patience)));
  if (auto opt = config.get("optimizer")) {
    if (*opt == "sgd") o.train.optimizer = Optimizer::Sgd;
    else if (*opt == "adam") o.train.optimizer = Optimizer::Adam;
    else throw UsageError("optimizer must be sgd or adam");
  }
  o.train.seed = seed;
  o.train.validate();
  o.neural.dim = static_cast<int>(positive("dim", o.neural.dim));
  o.neural.hidden = static_cast<int>(positive("hidden", o.neural.hidden));
  o.neural.max_tokens = static_cast<int>(positive("max_tokens", o.neural.max_tokens));
  o.neural.top_down = config.boolean("top_down", o.neural.top_down);
  o.min_count = static_cast<std::size_t>(positive("min_count", static_cast<long long>(o.min_count)));
  o.max_train_examples = static_cast<std::size_t>(non_negative("max_train_examples", 0));
  o.seed = seed;
  return o;
}

std::vector<std::pair<std::string, std::string>> TrainOptions::describe(ModelKind kind) const {
  std::vector<std::pair<std::string, std::string>> out;
  if (kind == ModelKind::Majority || kind == ModelKind::Length) return out;
  out.emplace_back("learning_rate", format_double(train.learning_rate));
  out.emplace_back("l2", format_double(train.l2));
  out.emplace_back("batch_size", std::to_string(train.batch_size));
  out.emplace_back("max_epochs", std::to_string(train.max_epochs));
  out.emplace_back("patience", std::to_string(train.patience));
  out.emplace_back("optimizer", train.optimizer == Optimizer::Adam ? "adam" : "sgd");
  if (is_neural(kind)) {
    out.emplace_back("min_count", std::to_string(min_count));
    out.emplace_back("max_train_examples", std::to_string(max_train_examples));
  }
  return out;
}

namespace {

std::vector<int> labels_of(const PairDataset& data) {
  std::vector<int> out;
  if (data.task == Task::Specificity) {
    for (const auto& e : data.specificity) out.push_back(binary_label(e.label));
  } else {
    for (const auto& e : data.stance) out.push_back(binary_label(e.label));
  }
  return out;
}

std::vector<std::string> claim_texts(const PairDataset& data) {
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<std::string> out;
  auto add = [&](const std::string& topic, const std::string& text) {
    if (seen.emplace(topic, text).second) out.push_back(text);
  };
  for (const auto& e : data.specificity) {
    add(e.topic_id, e.first_text);
    add(e.topic_id, e.second_text);
  }
  for (const auto& e : data.stance) {
    for (const auto& t : e.path_texts) add(e.topic_id, t);
  }
  return out;
}

std::vector<NeuralExample> neural_examples(const NeuralModel& model, const PairDataset& data) {
  std::vector<NeuralExample> out;
  out.reserve(data.size());
  for (const auto& e : data.specificity) out.push_back(model.make_example(e));
  for (const auto& e : data.stance) out.push_back(model.make_example(e));
  return out;
}

void check_task(const TrainedModel& model, Task task) {
  if (model.task != task) {
    throw DataError("model was trained for " + std::string(to_string(model.task)) + " but the test data is " +
                    std::string(to_string(task)));
  }
}

}  // namespace

TrainedModel train_on_pairs(ModelKind kind, const PairDataset& train, const PairDataset& dev,
                            const TrainOptions& options, const Logger& log) {
  if (train.task != dev.task) throw DataError("train and dev pairs are for different tasks");
  if (train.size() == 0) throw DataError("training split is empty");
  TrainedModel out;
  out.task = train.task;
  out.seed = options.seed;
  out.metadata = options.describe(kind);
  switch (kind) {
    case ModelKind::Majority: {
      const auto labels = labels_of(train);
      out.model = majority_fit(labels);
      break;
    }
    case ModelKind::Length:
      if (train.task != Task::Specificity) throw UsageError("the length baseline only applies to specificity");
      out.model = LengthModel{};
      break;
    case ModelKind::LogReg:
      throw UsageError("logreg trains on feature files; run featurize on the pairs first");
    default: {
      if (dev.size() == 0) throw DataError("dev split is empty");
      const Vocabulary vocab = Vocabulary::build(claim_texts(train), options.min_count, "train");
      NeuralModel model(kind, vocab.tokens(), options.neural, hash_string("init", options.seed));
      std::vector<NeuralExample> train_ex = neural_examples(model, train);
      if (options.max_train_examples && train_ex.size() > options.max_train_examples) {
        Rng rng(hash_string("sample", options.seed));
        rng.shuffle(train_ex);
        train_ex.resize(options.max_train_examples);
      }
      const std::vector<NeuralExample> dev_ex = neural_examples(model, dev);
      if (log) {
        log("vocabulary " + std::to_string(vocab.size()) + " tokens, " + std::to_string(train_ex.size()) +
            " training examples, " + std::to_string(dev_ex.size()) + " dev examples");
      }
      const NeuralTrainResult result = train_neural(model, train_ex, dev_ex, options.train, [&](const EpochRecord& r) {
        if (log) {
          log("epoch " + std::to_string(r.epoch) + " loss " + format_fixed(r.train_loss, 4) + " dev accuracy " +
              format_fixed(r.dev_accuracy, 4));
        }
      });
      out.metadata.emplace_back("train_examples", std::to_string(train_ex.size()));
      out.metadata.emplace_back("initial_loss", format_double(result.initial_loss));
      out.metadata.emplace_back("best_epoch", std::to_string(result.best_epoch));
      out.metadata.emplace_back("best_dev_accuracy", format_double(result.best_dev_accuracy));
      out.model = std::move(model);
      break;
    }
  }
  return out;
}

TrainedModel train_on_features(ModelKind kind, const FeatureDataset& train, const FeatureDataset& dev,
                               const TrainOptions& options, const Logger& log) {
  TrainedModel out;
  out.task = train.schema.task;
  out.seed = options.seed;
  out.metadata = options.describe(kind);
  if (kind == ModelKind::Majority) {
    if (train.rows.empty()) throw DataError("training split is empty");
    std::vector<int> labels;
    for (const auto& r : train.rows) labels.push_back(r.label);
    out.model = majority_fit(labels);
    return out;
  }
  if (kind != ModelKind::LogReg) {
    throw UsageError(std::string(to_string(kind)) + " trains on pairs files, not feature files");
  }
  LogRegModel model = train_logreg(train, dev, options.train);
  if (log) {
    log("logreg best epoch " + std::to_string(model.best_epoch) + " dev accuracy " +
        format_fixed(model.dev_accuracy, 4));
  }
  out.model = std::move(model);
  return out;
}

std::vector<EvalRecord> score_pairs(const TrainedModel& model, const PairDataset& test, std::size_t threads) {
  check_task(model, test.task);
  std::vector<EvalRecord> out(test.size());
  for (std::size_t i = 0; i < test.specificity.size(); ++i) {
    const auto& e = test.specificity[i];
    out[i] = {e.topic_id, e.distance, e.same_stance, binary_label(e.label), 0};
  }
  for (std::size_t i = 0; i < test.stance.size(); ++i) {
    const auto& e = test.stance[i];
    out[i] = {e.topic_id, e.distance, std::nullopt, binary_label(e.label), 0};
  }
  if (const auto* m = std::get_if<MajorityModel>(&model.model)) {
    for (auto& r : out) r.predicted = m->predict();
  } else if (std::holds_alternative<LengthModel>(model.model)) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      const auto& e = test.specificity[i];
      out[i].predicted = binary_label(length_predict(e.first_text, e.second_text));
    }
  } else if (std::holds_alternative<LogRegModel>(model.model)) {
    throw UsageError("logreg models are evaluated on feature files; run featurize on the test pairs first");
  } else {
    const auto& nn = std::get<NeuralModel>(model.model);
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        const NeuralExample ex =
            test.task == Task::Specificity ? nn.make_example(test.specificity[i]) : nn.make_example(test.stance[i]);
        out[i].predicted = nn.predict(ex);
      }
    };
    // Validate the example kind up front so worker threads cannot throw.
    if (!out.empty()) {
      if (test.task == Task::Specificity) nn.make_example(test.specificity[0]);
      else nn.make_example(test.stance[0]);
    }
    threads = std::max<std::size_t>(1, std::min(threads, out.size()));
    if (threads == 1) {
      work(0, out.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t block = (out.size() + threads - 1) / threads;
      for (std::size_t t = 0; t < threads; ++t) {
        const std::size_t begin = t * block, end = std::min(out.size(), begin + block);
        if (begin < end) pool.emplace_back(work, begin, end);
      }
      for (auto& th : pool) th.join();
    }
  }
  return out;
}

std::vector<EvalRecord> score_features(const TrainedModel& model, const FeatureDataset& test) {
  check_task(model, test.schema.task);
  std::vector<EvalRecord> out;
  out.reserve(test.rows.size());
  const auto* lr = std::get_if<LogRegModel>(&model.model);
  const auto* maj = std::get_if<MajorityModel>(&model.model);
  if (!lr && !maj) {
    throw UsageError(std::string(to_string(kind_of(model.model))) + " models are evaluated on pairs files");
  }
  for (const auto& row : test.rows) {
    EvalRecord r{row.topic_id, row.distance, row.same_stance, row.label, 0};
    r.predicted = lr ? predict_logreg(*lr, row.features, test.schema.tag).label : maj->predict();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace argtree

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

#include "argtree/cli/app.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "argtree/cli/pipeline.hpp"
#include "argtree/cli/run_config.hpp"
#include "argtree/common/error.hpp"
#include "argtree/common/files.hpp"
#include "argtree/common/format.hpp"
#include "argtree/corpus/corpus_io.hpp"
#include "argtree/corpus/outline.hpp"
#include "argtree/corpus/stats.hpp"
#include "argtree/corpus/text.hpp"
#include "argtree/eval/report.hpp"
#include "argtree/eval/stratified.hpp"
#include "argtree/eval/ttest.hpp"
#include "argtree/features/extract.hpp"
#include "argtree/features/feature_io.hpp"
#include "argtree/features/resources.hpp"
#include "argtree/features/vocabulary.hpp"
#include "argtree/models/checkpoint.hpp"
#include "argtree/models/gradcheck.hpp"
#include "argtree/pairs/derive.hpp"
#include "argtree/pairs/pairs_io.hpp"
#include "argtree/pairs/split.hpp"
#include "argtree/synth/synth.hpp"

namespace argtree {

namespace {

using nlohmann::ordered_json;

const std::map<std::string, std::string> kSynopsis{
    {"validate", "argtree validate <corpus>"},
    {"stats", "argtree stats <corpus> [--per-tree] [-o FILE]"},
    {"import-outline", "argtree import-outline <outline> --topic-id ID -o FILE"},
    {"synth", "argtree synth [--config F] [--seed S] [--set key=value]... -o CORPUS [--ledger FILE]"},
    {"derive-pairs",
     "argtree derive-pairs <corpus> --task specificity|stance [--max-distance N] [--split F --part P] -o FILE"},
    {"split", "argtree split <corpus> [--ratios 0.6,0.2,0.2] [--seed S] -o FILE"},
    {"featurize",
     "argtree featurize <pairs> --vocab F [--build-vocab] [--task T] [--lexicon F] [--embeddings F] [--use-path] "
     "[--feature-set bow|surface|all] -o FILE"},
    {"train", "argtree train --model KIND --train F --dev F [--task T] [--config F] -o CKPT"},
    {"evaluate", "argtree evaluate --model CKPT --test F [--strata LIST] [--name NAME] [-o report.csv]"},
    {"significance", "argtree significance --model-a CKPT --model-b CKPT --test F [--test-b F] [--alpha A]"},
    {"gradcheck", "argtree gradcheck --model logreg|pair|path-flat|path-hier [--epsilon E]"},
    {"report", "argtree report <report.csv>... [-o merged.csv]"},
};

struct Globals {
  std::optional<std::uint64_t> seed;
  std::string config_path;
  std::vector<std::string> assignments;
  std::size_t threads = 1;

  RunConfig config;
  std::uint64_t resolved_seed = 0;
};

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
  } else {
    write_file_atomic(path, content);
  }
}

std::vector<ArgumentTree> open_corpus(const std::string& path) { return load_corpus(path); }

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("file not found: " + path);
  return in;
}

// True when the file starts with a feature-file header.
bool is_feature_file(const std::string& path) {
  std::ifstream in = open_input(path);
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto j = ordered_json::parse(line, nullptr, false);
    return j.is_object() && j.contains("schema") && j["schema"] == "argtree-features/1";
  }
  return false;
}

std::array<double, 3> parse_ratios(const std::string& text) {
  std::array<double, 3> out{};
  std::stringstream in(text);
  std::string part;
  std::size_t i = 0;
  while (std::getline(in, part, ',')) {
    if (i >= 3) throw UsageError("--ratios needs exactly three values");
    try {
      out[i++] = parse_double(trim(part), "ratio");
    } catch (const DataError& e) {
      throw UsageError(e.what());
    }
  }
  if (i != 3) throw UsageError("--ratios needs exactly three values");
  return out;
}

void log_line(const std::string& command, const std::string& message) {
  std::cerr << "argtree " << command << ": " << message << "\n";
}

// ---------------------------------------------------------------- commands

int cmd_validate(const std::string& path) {
  const auto trees = open_corpus(path);
  std::size_t bad = 0, claims = 0;
  for (const auto& tree : trees) {
    claims += tree.size();
    for (const auto& v : validate_tree(tree)) {
      ++bad;
      std::cout << tree.topic_id << "\t" << v.node_id << "\t" << v.rule << ": " << v.detail << "\n";
    }
  }
  if (bad) {
    std::cerr << "argtree validate: " << bad << " violation(s)\n";
    return 1;
  }
  std::cout << "ok: " << trees.size() << " trees, " << claims << " claims\n";
  return 0;
}

int cmd_stats(const std::string& path, bool per_tree, const std::string& out) {
  const auto trees = open_corpus(path);
  const auto stats = corpus_stats(trees);
  ordered_json j = ordered_json::parse(stats_to_json(stats));
  if (per_tree) {
    ordered_json rows = ordered_json::array();
    for (const auto& t : trees) {
      std::size_t pro = 0, con = 0;
      for (const auto& [id, n] : t.nodes) {
        if (n.stance == Stance::Pro) ++pro;
        if (n.stance == Stance::Con) ++con;
      }
      ordered_json r;
      r["topic_id"] = t.topic_id;
      r["claims"] = t.size();
      r["depth"] = tree_depth(t);
      r["pro"] = pro;
      r["con"] = con;
      rows.push_back(r);
    }
    j["trees"] = rows;
  }
  emit(out, j.dump(2) + "\n");
  return 0;
}

int cmd_import_outline(const std::string& path, const std::string& topic, const std::string& out) {
  std::ifstream in = open_input(path);
  const ArgumentTree tree = import_outline(in, topic);
  emit(out, format_tree(tree) + "\n");
  return 0;
}

int cmd_synth(const Globals& g, const std::string& out, const std::string& ledger_path) {
  SynthConfig config;
  for (const auto& [k, v] : g.config.values()) set_synth_option(config, k, v);
  config.seed = g.resolved_seed;
  const SynthCorpus corpus = generate_corpus(config);
  emit(out, format_corpus(corpus.trees));
  if (!ledger_path.empty()) emit(ledger_path, format_ledger(corpus.ledger));
  log_line("synth", std::to_string(corpus.ledger.topics) + " topics, " + std::to_string(corpus.ledger.nodes) +
                        " claims");
  return 0;
}

int cmd_derive(const Globals& g, const std::string& path, const std::string& task_name, int max_distance,
               const std::string& split_path, const std::string& part_name, const std::string& out) {
  const Task task = parse_task(task_name);
  if (max_distance < 0) max_distance = task == Task::Specificity ? 5 : 4;
  if (max_distance == 0) throw UsageError("--max-distance must be positive");
  std::vector<ArgumentTree> trees = open_corpus(path);
  if (split_path.empty() != part_name.empty()) throw UsageError("--split and --part go together");
  if (!split_path.empty()) {
    const TopicSplit split = load_split(split_path);
    const auto& keep = split.part(parse_split_part(part_name));
    std::erase_if(trees, [&](const ArgumentTree& t) { return !keep.count(t.topic_id); });
  }
  const auto d = static_cast<std::size_t>(max_distance);
  std::string text = task == Task::Specificity
                         ? format_pairs(derive_specificity_examples(trees, d, g.resolved_seed))
                         : format_pairs(derive_stance_examples(trees, d));
  emit(out, text);
  return 0;
}

int cmd_split(const Globals& g, const std::string& path, const std::string& ratios, const std::string& out) {
  const auto trees = open_corpus(path);
  const TopicSplit split = split_by_topic(trees, parse_ratios(ratios), g.resolved_seed);
  emit(out, format_split(split));
  log_line("split", std::to_string(split.train.size()) + "/" + std::to_string(split.dev.size()) + "/" +
                        std::to_string(split.test.size()) + " topics");
  return 0;
}

struct FeaturizeArgs {
  std::string pairs, task, vocab, lexicon, embeddings, feature_set = "all", out;
  bool build_vocab = false, use_path = false;
  std::size_t min_count = 2;
};

std::vector<std::string> vocabulary_texts(const PairDataset& data) {
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

int cmd_featurize(const FeaturizeArgs& a) {
  const PairDataset data = load_pairs(a.pairs);
  if (!a.task.empty() && parse_task(a.task) != data.task && data.size() > 0) {
    throw DataError(a.pairs + " holds " + std::string(to_string(data.task)) + " pairs, not " + a.task);
  }
  const Task task = a.task.empty() ? data.task : parse_task(a.task);
  const FeatureSet set = parse_feature_set(a.feature_set);
  if (a.use_path && task != Task::Stance) throw UsageError("--use-path applies to the stance task only");

  Vocabulary vocab;
  if (a.build_vocab) {
    vocab = Vocabulary::build(vocabulary_texts(data), a.min_count, std::filesystem::path(a.pairs).filename().string());
    write_file_atomic(a.vocab, vocab.serialize());
  } else {
    vocab = Vocabulary::load(a.vocab);
  }
  const Lexicon lexicon = a.lexicon.empty() ? Lexicon() : Lexicon::load(a.lexicon);
  std::optional<EmbeddingTable> embeddings;
  if (!a.embeddings.empty()) embeddings = EmbeddingTable::load(a.embeddings);
  const StanceResources res = StanceResources::from(vocab, lexicon, embeddings ? &*embeddings : nullptr);

  // Dense names come from a probe example so that empty inputs still get a
  // complete schema.
  FeatureVector probe;
  if (task == Task::Specificity) {
    SpecificityExample ex;
    ex.first_text = "a";
    ex.second_text = "b";
    probe = specificity_features(vocab, lexicon, set, ex);
  } else {
    StanceExample ex;
    ex.path_texts = {"a", "b"};
    probe = stance_features(res, set, a.use_path, ex);
  }
  std::vector<std::string> sparse_names;
  if (set != FeatureSet::Surface) sparse_names = vocab.tokens();
  std::string label = std::string(to_string(set)) + (a.use_path ? "+path" : "");
  FeatureDataset out;
  out.schema = FeatureSchema::make(task, label, sparse_names, probe.dense_names());
  for (const auto& e : data.specificity) {
    out.rows.push_back({e.topic_id, e.distance, e.same_stance, binary_label(e.label),
                        specificity_features(vocab, lexicon, set, e)});
  }
  for (const auto& e : data.stance) {
    out.rows.push_back(
        {e.topic_id, e.distance, std::nullopt, binary_label(e.label), stance_features(res, set, a.use_path, e)});
  }
  emit(a.out, format_features(out));
  log_line("featurize", std::to_string(out.rows.size()) + " rows, schema " + out.schema.tag);
  return 0;
}

int cmd_train(const Globals& g, const std::string& kind_name, const std::string& task_name,
              const std::string& train_path, const std::string& dev_path, const std::string& out) {
  const ModelKind kind = parse_model_kind(kind_name);
  const TrainOptions options = TrainOptions::from(kind, g.config, g.resolved_seed);
  auto log = [](const std::string& m) { log_line("train", m); };
  TrainedModel model;
  if (is_feature_file(train_path)) {
    const FeatureDataset train = load_features(train_path);
    const FeatureDataset dev = load_features(dev_path);
    model = train_on_features(kind, train, dev, options, log);
  } else {
    const PairDataset train = load_pairs(train_path);
    const PairDataset dev = load_pairs(dev_path);
    model = train_on_pairs(kind, train, dev, options, log);
  }
  if (!task_name.empty() && parse_task(task_name) != model.task) {
    throw DataError("training data is for " + std::string(to_string(model.task)) + ", not " + task_name);
  }
  emit(out, format_checkpoint(to_checkpoint(model)));
  return 0;
}

std::vector<EvalRecord> score_file(const TrainedModel& model, const std::string& test, std::size_t threads) {
  if (is_feature_file(test)) return score_features(model, load_features(test));
  return score_pairs(model, load_pairs(test), threads);
}

int cmd_evaluate(const Globals& g, const std::string& ckpt, const std::string& test, const std::string& strata,
                 std::string name, const std::string& out) {
  const TrainedModel model = from_checkpoint(load_checkpoint(ckpt));
  const auto records = score_file(model, test, g.threads);
  if (records.empty()) throw DataError("test file " + test + " has no examples");
  if (name.empty()) name = std::string(to_string(kind_of(model.model)));
  const auto names = strata.empty() ? default_strata(model.task, records) : parse_strata(strata);
  const EvalReport report = stratified_eval(name, model.task, records, names);
  const std::vector<EvalReport> reports{report};
  if (!out.empty()) write_file_atomic(out, format_report_csv(reports));
  std::cout << format_report_text(reports);
  return 0;
}

int cmd_significance(const Globals& g, const std::string& a_path, const std::string& b_path,
                     const std::string& test_a, std::string test_b, double alpha, const std::string& out) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw UsageError("--alpha must be in (0, 1)");
  if (test_b.empty()) test_b = test_a;
  const TrainedModel a = from_checkpoint(load_checkpoint(a_path));
  const TrainedModel b = from_checkpoint(load_checkpoint(b_path));
  const auto ra = score_file(a, test_a, g.threads);
  const auto rb = score_file(b, test_b, g.threads);
  if (ra.size() != rb.size()) throw DataError("the two test files hold different numbers of examples");
  const PairedTopicAccuracy paired = paired_topic_accuracy(ra, rb);
  const TTestResult t = paired_t_test(paired.a, paired.b);
  ordered_json j;
  j["topics"] = paired.topics.size();
  j["mean_difference"] = t.mean_difference;
  j["degenerate"] = t.degenerate;
  if (t.degenerate) {
    j["t"] = nullptr;
    j["p"] = nullptr;
  } else {
    j["t"] = t.t;
    j["p"] = t.p;
  }
  j["df"] = t.df;
  j["alpha"] = alpha;
  j["significant"] = !t.degenerate && t.p < alpha;
  emit(out, j.dump(2) + "\n");
  return 0;
}

int cmd_gradcheck(const Globals& g, const std::string& kind_name, double epsilon) {
  const ModelKind kind = parse_model_kind(kind_name);
  const GradCheckResult r = gradient_check(kind, epsilon, g.resolved_seed == 0 ? 1 : g.resolved_seed);
  constexpr double kTolerance = 1e-4;
  ordered_json j;
  j["model"] = kind_name;
  j["parameters"] = r.parameters;
  j["max_relative_error"] = r.max_relative_error;
  j["tolerance"] = kTolerance;
  j["pass"] = r.max_relative_error < kTolerance;
  std::cout << j.dump(2) << "\n";
  return r.max_relative_error < kTolerance ? 0 : 1;
}

int cmd_report(const std::vector<std::string>& inputs, const std::string& out) {
  std::vector<EvalReport> all;
  for (const auto& path : inputs) {
    auto part = parse_report_csv(read_file(path));
    all.insert(all.end(), part.begin(), part.end());
  }
  if (!out.empty()) write_file_atomic(out, format_report_csv(all));
  std::cout << format_report_text(all);
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"argtree: argument-tree corpora, pair derivation, models and evaluation"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Global seed (default: config seed, then $ARGTREE_SEED, then 0)");
  app.add_option("--config", g.config_path, "key = value settings file");
  app.add_option("--set", g.assignments, "Override one setting, key=value");
  app.add_option("--threads", g.threads, "Worker threads for prediction")->check(CLI::PositiveNumber);

  std::string corpus, out, task, topic, ledger, split_path, part, ratios = "0.6,0.2,0.2";
  std::string model_kind, train_path, dev_path, ckpt, test, strata, name, model_b, test_b;
  std::vector<std::string> reports;
  int max_distance = -1;
  bool per_tree = false;
  double alpha = 0.05, epsilon = 1e-5;
  FeaturizeArgs fz;

  auto* validate = app.add_subcommand("validate", "Check every tree's structural invariants");
  validate->add_option("corpus", corpus)->required();

  auto* stats = app.add_subcommand("stats", "Corpus statistics as JSON");
  stats->add_option("corpus", corpus)->required();
  stats->add_flag("--per-tree", per_tree);
  stats->add_option("-o,--output", out);

  auto* outline = app.add_subcommand("import-outline", "Convert a numbered outline to a corpus line");
  outline->add_option("outline", corpus)->required();
  outline->add_option("--topic-id", topic)->required();
  outline->add_option("-o,--output", out)->required();

  auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus with planted signals");
  synth->add_option("-o,--output", out)->required();
  synth->add_option("--ledger", ledger);

  auto* derive = app.add_subcommand("derive-pairs", "Derive specificity or stance pairs");
  derive->add_option("corpus", corpus)->required();
  derive->add_option("--task", task)->required();
  derive->add_option("--max-distance", max_distance);
  derive->add_option("--split", split_path);
  derive->add_option("--part", part);
  derive->add_option("-o,--output", out)->required();

  auto* split = app.add_subcommand("split", "Topic-disjoint train/dev/test split");
  split->add_option("corpus", corpus)->required();
  split->add_option("--ratios", ratios);
  split->add_option("-o,--output", out)->required();

  auto* featurize = app.add_subcommand("featurize", "Feature vectors for logistic regression");
  featurize->add_option("pairs", fz.pairs)->required();
  featurize->add_option("--task", fz.task);
  featurize->add_option("--vocab", fz.vocab)->required();
  featurize->add_flag("--build-vocab", fz.build_vocab, "Build the vocabulary from these pairs and save it");
  featurize->add_option("--min-count", fz.min_count);
  featurize->add_option("--lexicon", fz.lexicon);
  featurize->add_option("--embeddings", fz.embeddings);
  featurize->add_flag("--use-path", fz.use_path);
  featurize->add_option("--feature-set", fz.feature_set);
  featurize->add_option("-o,--output", fz.out)->required();

  auto* train = app.add_subcommand("train", "Train a model and write a checkpoint");
  train->add_option("--model", model_kind)->required();
  train->add_option("--task", task);
  train->add_option("--train", train_path)->required();
  train->add_option("--dev", dev_path)->required();
  train->add_option("-o,--output", out)->required();

  auto* evaluate = app.add_subcommand("evaluate", "Stratified accuracy of a checkpoint");
  evaluate->add_option("--model", ckpt)->required();
  evaluate->add_option("--test", test)->required();
  evaluate->add_option("--strata", strata);
  evaluate->add_option("--name", name);
  evaluate->add_option("-o,--output", out);

  auto* significance = app.add_subcommand("significance", "Paired t-test over per-topic accuracies");
  significance->add_option("--model-a", ckpt)->required();
  significance->add_option("--model-b", model_b)->required();
  significance->add_option("--test", test)->required();
  significance->add_option("--test-b", test_b);
  significance->add_option("--alpha", alpha);
  significance->add_option("-o,--output", out);

  auto* gradcheck = app.add_subcommand("gradcheck", "Finite-difference gradient check");
  gradcheck->add_option("--model", model_kind)->required();
  gradcheck->add_option("--epsilon", epsilon);

  auto* report = app.add_subcommand("report", "Merge report CSVs and print a table");
  report->add_option("reports", reports)->required();
  report->add_option("-o,--output", out);

  std::string command = "argtree";
  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      const auto subs = app.get_subcommands();
      const std::string sub = subs.empty() ? "" : subs.front()->get_name();
      std::cerr << "argtree" << (sub.empty() ? "" : " " + sub) << ": " << e.what() << "\n";
      if (!sub.empty()) std::cerr << "usage: " << kSynopsis.at(sub) << "\n";
      else std::cerr << "usage: argtree <command> [options]; see argtree --help\n";
      return 2;
    }
    const std::string sub = app.get_subcommands().front()->get_name();
    command = sub;
    if (!g.config_path.empty()) g.config = RunConfig::load(g.config_path);
    for (const auto& a : g.assignments) g.config.set_assignment(a);
    if (!g.config_path.empty() || !g.assignments.empty()) {
      if (g.config.has("threads")) {
        const long long t = g.config.integer("threads", 1);
        if (t <= 0) throw UsageError("threads must be positive");
        g.threads = static_cast<std::size_t>(t);
      }
    }
    g.resolved_seed = resolve_seed(g.seed, g.config);
    log_line(sub, "seed=" + std::to_string(g.resolved_seed) + " threads=" + std::to_string(g.threads) +
                      " config: " + g.config.describe());

    if (sub == "validate") return cmd_validate(corpus);
    if (sub == "stats") return cmd_stats(corpus, per_tree, out);
    if (sub == "import-outline") return cmd_import_outline(corpus, topic, out);
    if (sub == "synth") return cmd_synth(g, out, ledger);
    if (sub == "derive-pairs") return cmd_derive(g, corpus, task, max_distance, split_path, part, out);
    if (sub == "split") return cmd_split(g, corpus, ratios, out);
    if (sub == "featurize") return cmd_featurize(fz);
    if (sub == "train") return cmd_train(g, model_kind, task, train_path, dev_path, out);
    if (sub == "evaluate") return cmd_evaluate(g, ckpt, test, strata, name, out);
    if (sub == "significance") return cmd_significance(g, ckpt, model_b, test, test_b, alpha, out);
    if (sub == "gradcheck") return cmd_gradcheck(g, model_kind, epsilon);
    if (sub == "report") return cmd_report(reports, out);
    throw UsageError("unknown command '" + sub + "'");
  } catch (const UsageError& e) {
    std::cerr << "argtree " << command << ": " << e.what() << "\n";
    auto it = kSynopsis.find(command);
    if (it != kSynopsis.end()) std::cerr << "usage: " << it->second << "\n";
    return 2;
  } catch (const DataError& e) {
    std::cerr << "argtree " << command << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "argtree " << command << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace argtree

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

#include "argtree/synth/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "argtree/common/error.hpp"
#include "argtree/common/format.hpp"
#include "argtree/common/rng.hpp"
#include "argtree/corpus/text.hpp"

namespace argtree {

namespace {

constexpr int kRootMinLength = 10;
constexpr int kRootMaxLength = 14;
constexpr int kMinLength = 6;
constexpr int kAnchorSpacing = 5;
constexpr std::size_t kConceptsPerTopic = 20;
constexpr double kConceptShare = 0.3;  // the rest of each claim is filler words
constexpr double kMaxNodesPerTree = 2e6;

const std::vector<std::string> kConnectives{"also", "but", "only", "because"};

const std::vector<std::string> kFillers{"the",   "a",     "of",   "to",    "is",    "that",   "in",    "for",
                                        "and",   "more",  "can",  "this",  "with",  "from",   "most",  "many",
                                        "would", "should", "some", "there", "often", "people", "make", "being"};

const std::vector<std::string>& concept_pool() {
  static const std::vector<std::string> pool = [] {
    const char* onsets[] = {"b", "d", "f", "g", "k", "l", "m", "n", "p", "r", "s", "t", "v", "z"};
    const char* vowels[] = {"a", "e", "i", "o", "u"};
    std::vector<std::string> out;
    for (const char* o1 : onsets) {
      for (const char* v1 : vowels) {
        for (const char* o2 : {"r", "l", "n", "s", "t", "m"}) {
          for (const char* v2 : {"a", "o", "i"}) out.push_back(std::string(o1) + v1 + o2 + v2 + "x");
        }
      }
    }
    return out;
  }();
  return pool;
}

double check_probability(std::string_view name, double p) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw UsageError(std::string(name) + " must be in [0, 1], got " + format_double(p));
  }
  return p;
}

struct GenNode {
  ClaimId id;
  int parent = -1;
  int depth = 0;
  int length = 0;
  int anchor = 0;
  bool marker_flipped = false;
  std::optional<Stance> stance;
};

}  // namespace

const std::vector<std::string>& synth_anchor_words() {
  // Few anchors, so every anchor is seen often enough to be learned; at least
  // kAnchorSpacing + 1 are needed for the spacing rule.
  static const std::vector<std::string> anchors{"amber", "basalt", "cobalt", "delta",
                                                "ember", "fjord",  "garnet", "harbor"};
  return anchors;
}

void SynthConfig::validate() const {
  if (topic_count == 0) throw UsageError("topic_count must be at least 1");
  if (branching_min < 0 || branching_max < branching_min) {
    throw UsageError("branching bounds must satisfy 0 <= min <= max");
  }
  if (depth_min < 0 || depth_max < depth_min) throw UsageError("depth bounds must satisfy 0 <= min <= max");
  if (depth_min > 0 && branching_max == 0) throw UsageError("depth_min > 0 is unreachable with branching_max = 0");
  double worst = 0.0, level = 1.0;
  for (int d = 0; d <= depth_max && worst <= kMaxNodesPerTree; ++d) {
    worst += level;
    level *= branching_max;
  }
  if (worst > kMaxNodesPerTree) throw UsageError("branching_max and depth_max allow trees of more than 2e6 claims");
  check_probability("con_probability", con_probability);
  check_probability("length_signal_p", length_signal_p);
  check_probability("stance_marker_p", stance_marker_p);
  check_probability("connective_p", connective_p);
}

bool set_synth_option(SynthConfig& c, std::string_view key, std::string_view value) {
  auto as_int = [&](std::string_view what) {
    const long long v = [&] {
      try {
        return parse_int(value, what);
      } catch (const DataError& e) {
        throw UsageError(e.what());
      }
    }();
    if (v < 0 || v > 1000000000) throw UsageError(std::string(what) + " out of range");
    return v;
  };
  auto as_real = [&](std::string_view what) {
    try {
      return parse_double(value, what);
    } catch (const DataError& e) {
      throw UsageError(e.what());
    }
  };
  if (key == "topic_count") c.topic_count = static_cast<std::size_t>(as_int(key));
  else if (key == "branching_min") c.branching_min = static_cast<int>(as_int(key));
  else if (key == "branching_max") c.branching_max = static_cast<int>(as_int(key));
  else if (key == "depth_min") c.depth_min = static_cast<int>(as_int(key));
  else if (key == "depth_max") c.depth_max = static_cast<int>(as_int(key));
  else if (key == "con_probability") c.con_probability = as_real(key);
  else if (key == "length_signal_p") c.length_signal_p = as_real(key);
  else if (key == "stance_marker_p") c.stance_marker_p = as_real(key);
  else if (key == "connective_p") c.connective_p = as_real(key);
  else if (key == "seed") c.seed = static_cast<std::uint64_t>(as_int(key));
  else return false;
  return true;
}

double DistanceLedger::expected_length_accuracy() const {
  if (pairs == 0) return 0.0;
  return (static_cast<double>(longer) + 0.5 * static_cast<double>(equal)) / static_cast<double>(pairs);
}

const DistanceLedger* SynthLedger::at(int distance) const {
  for (const auto& d : distances) {
    if (d.distance == distance) return &d;
  }
  return nullptr;
}

namespace {

std::string make_text(Rng& rng, const std::vector<std::string>& prefix, int length, const std::vector<std::string>& concepts,
                      bool root) {
  std::string text;
  int count = 0;
  auto push = [&](const std::string& w) {
    if (!text.empty()) text += ' ';
    text += w;
    ++count;
  };
  for (const auto& w : prefix) push(w);
  while (count < length - 1) push(rng.bernoulli(kConceptShare) ? rng.pick(concepts) : rng.pick(kFillers));
  text += root ? " ?" : " .";
  return text;
}

void generate_topic(const SynthConfig& config, std::size_t index, std::size_t width, SynthCorpus& out) {
  char name[32];
  std::snprintf(name, sizeof(name), "synth-%0*zu", static_cast<int>(width), index + 1);
  const std::string topic(name);
  Rng rng(hash_string(topic, config.seed));
  const auto& anchors = synth_anchor_words();
  SynthLedger& ledger = out.ledger;

  std::vector<std::string> concepts;
  for (std::size_t i = 0; i < kConceptsPerTopic; ++i) concepts.push_back(rng.pick(concept_pool()));

  const int target_depth = rng.between(config.depth_min, config.depth_max);
  std::vector<GenNode> nodes;
  GenNode root;
  root.id = "1";
  root.length = rng.between(kRootMinLength, kRootMaxLength);
  root.anchor = static_cast<int>(rng.below(anchors.size()));
  nodes.push_back(root);
  TreeBuilder builder(topic, root.id, make_text(rng, {anchors[static_cast<std::size_t>(root.anchor)]}, root.length,
                                                concepts, true));
  builder.tag("synthetic");

  // Depth-first generation; the stack holds (node index, on the spine).
  std::vector<std::pair<int, bool>> stack{{0, true}};
  while (!stack.empty()) {
    const auto [pi, spine] = stack.back();
    stack.pop_back();
    if (nodes[static_cast<std::size_t>(pi)].depth >= target_depth) continue;
    int k = rng.between(config.branching_min, config.branching_max);
    if (spine && k == 0) k = 1;
    std::vector<int> created;
    for (int c = 0; c < k; ++c) {
      const GenNode& parent = nodes[static_cast<std::size_t>(pi)];
      GenNode n;
      n.id = parent.id + "." + std::to_string(c + 1);
      n.parent = pi;
      n.depth = parent.depth + 1;
      n.stance = rng.bernoulli(config.con_probability) ? Stance::Con : Stance::Pro;

      const bool grows = rng.bernoulli(config.length_signal_p);
      n.length = grows ? parent.length + rng.between(3, 8) : std::max(kMinLength, parent.length - rng.between(1, 3));

      std::vector<int> taken;
      for (int a = pi, hops = 0; a >= 0 && hops < kAnchorSpacing; a = nodes[static_cast<std::size_t>(a)].parent, ++hops) {
        taken.push_back(nodes[static_cast<std::size_t>(a)].anchor);
      }
      std::vector<int> free;
      for (int a = 0; a < static_cast<int>(anchors.size()); ++a) {
        if (std::find(taken.begin(), taken.end(), a) == taken.end()) free.push_back(a);
      }
      n.anchor = rng.pick(free);

      const bool faithful = rng.bernoulli(config.stance_marker_p);
      n.marker_flipped = !faithful;
      const bool has_marker = (*n.stance == Stance::Con) == faithful;

      std::vector<std::string> prefix;
      const bool connective = rng.bernoulli(config.connective_p);
      if (connective) prefix.push_back(rng.pick(kConnectives));
      if (has_marker) prefix.push_back(anchors[static_cast<std::size_t>(parent.anchor)]);
      prefix.push_back(anchors[static_cast<std::size_t>(n.anchor)]);
      n.length = std::max(n.length, static_cast<int>(prefix.size()) + 2);
      builder.add(parent.id, n.id, *n.stance, make_text(rng, prefix, n.length, concepts, false));

      ++ledger.edges;
      ++(*n.stance == Stance::Pro ? ledger.pro_edges : ledger.con_edges);
      ledger.length_signal_fired += grows;
      ledger.marker_faithful += faithful;
      ledger.connective_fired += connective;
      created.push_back(static_cast<int>(nodes.size()));
      nodes.push_back(std::move(n));
    }
    // Push in reverse so that the first child is expanded first.
    for (std::size_t c = created.size(); c-- > 0;) stack.emplace_back(created[c], spine && c == 0);
  }

  ArgumentTree tree = std::move(builder).build();
  // Measured token counts, so the ledger reflects what a tokenizer sees.
  std::vector<std::size_t> tokens(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) tokens[i] = tokenize(tree.node(nodes[i].id).text).size();
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    bool parity = false;
    int d = 0;
    for (int a = static_cast<int>(i); nodes[static_cast<std::size_t>(a)].parent >= 0;) {
      parity ^= nodes[static_cast<std::size_t>(a)].marker_flipped;
      a = nodes[static_cast<std::size_t>(a)].parent;
      ++d;
      if (ledger.distances.size() < static_cast<std::size_t>(d)) {
        ledger.distances.push_back(DistanceLedger{});
        ledger.distances.back().distance = d;
      }
      DistanceLedger& dl = ledger.distances[static_cast<std::size_t>(d - 1)];
      ++dl.pairs;
      const std::size_t below = tokens[i], above = tokens[static_cast<std::size_t>(a)];
      ++(below > above ? dl.longer : below == above ? dl.equal : dl.shorter);
      dl.marker_parity_faithful += !parity;
    }
  }
  ledger.nodes += nodes.size();
  ++ledger.topics;
  out.trees.push_back(std::move(tree));
}

}  // namespace

SynthCorpus generate_corpus(const SynthConfig& config) {
  config.validate();
  SynthCorpus out;
  const std::size_t width = std::max<std::size_t>(4, std::to_string(config.topic_count).size());
  for (std::size_t t = 0; t < config.topic_count; ++t) generate_topic(config, t, width, out);
  return out;
}

std::string format_ledger(const SynthLedger& ledger) {
  using nlohmann::ordered_json;
  std::string out;
  ordered_json summary;
  summary["record"] = "summary";
  summary["topics"] = ledger.topics;
  summary["nodes"] = ledger.nodes;
  summary["edges"] = ledger.edges;
  summary["pro_edges"] = ledger.pro_edges;
  summary["con_edges"] = ledger.con_edges;
  summary["length_signal_fired"] = ledger.length_signal_fired;
  summary["marker_faithful"] = ledger.marker_faithful;
  summary["connective_fired"] = ledger.connective_fired;
  summary["non_root_claims"] = ledger.edges;
  out += summary.dump() + "\n";
  for (const auto& d : ledger.distances) {
    ordered_json j;
    j["record"] = "distance";
    j["distance"] = d.distance;
    j["pairs"] = d.pairs;
    j["longer"] = d.longer;
    j["equal"] = d.equal;
    j["shorter"] = d.shorter;
    j["expected_length_accuracy"] = d.expected_length_accuracy();
    j["marker_parity_faithful"] = d.marker_parity_faithful;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace argtree

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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "argtree/common/files.hpp"
#include "argtree/corpus/corpus_io.hpp"
#include "argtree/eval/report.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using argtree::testing::data_path;

namespace {

struct CliRun {
  int code = -1;
  std::string out, err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("argtree-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  CliRun run(const std::string& args) const {
    const std::string out = path("stdout.txt"), err = path("stderr.txt");
    const std::string cmd = std::string(ARGTREE_BIN) + " " + args + " > " + out + " 2> " + err;
    const int status = std::system(cmd.c_str());
    CliRun r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = argtree::read_file(out);
    r.err = argtree::read_file(err);
    return r;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, MissingCorpusIsADataError) {
  auto r = run("stats " + path("missing.jsonl"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("file not found"), std::string::npos) << r.err;
}

TEST_F(Cli, UsageErrorsExitTwo) {
  auto r = run("derive-pairs " + data_path("fig1.jsonl").string() + " --task sideways -o " + path("p.jsonl"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("usage: argtree derive-pairs"), std::string::npos) << r.err;
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("synth --set colour=red -o " + path("c.jsonl")).code, 2);
  EXPECT_EQ(run("train --model pair").code, 2);
}

TEST_F(Cli, ValidateAndStats) {
  auto r = run("validate " + data_path("fig1.jsonl").string());
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "ok: 1 trees, 6 claims\n");
  r = run("stats " + data_path("fig1.jsonl").string() + " --per-tree");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"trees\""), std::string::npos);
}

TEST_F(Cli, ImportOutlineMatchesFixture) {
  auto r = run("import-outline " + data_path("fig1_outline.txt").string() + " --topic-id hp -o " + path("o.jsonl"));
  ASSERT_EQ(r.code, 0) << r.err;
  auto imported = argtree::load_corpus(path("o.jsonl")).front();
  auto fixture = argtree::load_corpus(data_path("fig1.jsonl").string()).front();
  ASSERT_EQ(imported.size(), fixture.size());
  for (const auto& [id, n] : fixture.nodes) EXPECT_EQ(imported.node(id).text, n.text);
}

TEST_F(Cli, DerivePairsIsByteIdentical) {
  ASSERT_EQ(run("synth --seed 3 --set topic_count=30 -o " + path("c.jsonl")).code, 0);
  ASSERT_EQ(run("derive-pairs " + path("c.jsonl") + " --task specificity --seed 4 -o " + path("a.jsonl")).code, 0);
  ASSERT_EQ(run("derive-pairs " + path("c.jsonl") + " --task specificity --seed 4 -o " + path("b.jsonl")).code, 0);
  const auto a = argtree::read_file(path("a.jsonl"));
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, argtree::read_file(path("b.jsonl")));
}

TEST_F(Cli, SeedPrecedence) {
  std::ofstream(path("run.conf")) << "# settings\nseed = 9\ntopic_count = 5\n";
  ASSERT_EQ(run("synth --config " + path("run.conf") + " -o " + path("conf.jsonl")).code, 0);
  ASSERT_EQ(run("synth --seed 9 --set topic_count=5 -o " + path("flag.jsonl")).code, 0);
  EXPECT_EQ(argtree::read_file(path("conf.jsonl")), argtree::read_file(path("flag.jsonl")));
  ASSERT_EQ(run("synth --config " + path("run.conf") + " --seed 10 -o " + path("other.jsonl")).code, 0);
  EXPECT_NE(argtree::read_file(path("conf.jsonl")), argtree::read_file(path("other.jsonl")));
  ASSERT_EQ(run("synth --seed 10 --set topic_count=5 -o " + path("ten.jsonl")).code, 0);
  EXPECT_EQ(argtree::read_file(path("other.jsonl")), argtree::read_file(path("ten.jsonl")));
}

TEST_F(Cli, FullPipeline) {
  const std::string c = path("c.jsonl"), s = path("split.json");
  ASSERT_EQ(run("synth --seed 1 --set topic_count=60 -o " + c + " --ledger " + path("ledger.json")).code, 0);
  ASSERT_EQ(run("split " + c + " --seed 2 -o " + s).code, 0);
  for (const std::string part : {"train", "dev", "test"}) {
    auto r = run("derive-pairs " + c + " --task specificity --split " + s + " --part " + part + " -o " +
                 path(part + ".pairs"));
    ASSERT_EQ(r.code, 0) << r.err;
  }
  ASSERT_EQ(run("featurize " + path("train.pairs") + " --vocab " + path("vocab.txt") + " --build-vocab -o " +
                path("train.feat"))
                .code,
            0);
  for (const std::string part : {"dev", "test"}) {
    ASSERT_EQ(run("featurize " + path(part + ".pairs") + " --vocab " + path("vocab.txt") + " -o " +
                  path(part + ".feat"))
                  .code,
              0);
  }
  auto r = run("train --model logreg --train " + path("train.feat") + " --dev " + path("dev.feat") +
               " --set max_epochs=5 -o " + path("lr.ckpt"));
  ASSERT_EQ(r.code, 0) << r.err;
  r = run("evaluate --model " + path("lr.ckpt") + " --test " + path("test.feat") + " -o " + path("lr.csv"));
  ASSERT_EQ(r.code, 0) << r.err;
  auto reports = argtree::parse_report_csv(argtree::read_file(path("lr.csv")));
  ASSERT_EQ(reports.size(), 1u);
  for (const std::string stratum : {"all", "d1", "d2", "d3", "d4", "d5", "same-stance"}) {
    const auto* s = reports[0].find(stratum);
    ASSERT_NE(s, nullptr) << stratum;
    EXPECT_GT(s->count, 0u) << stratum;
  }
  EXPECT_GT(reports[0].overall().accuracy(), 0.8);

  r = run("train --model length --train " + path("train.pairs") + " --dev " + path("dev.pairs") + " -o " +
          path("len.ckpt"));
  ASSERT_EQ(r.code, 0) << r.err;
  ASSERT_EQ(run("evaluate --model " + path("len.ckpt") + " --test " + path("test.pairs") + " -o " + path("len.csv"))
                .code,
            0);
  r = run("report " + path("lr.csv") + " " + path("len.csv") + " -o " + path("all.csv"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(argtree::parse_report_csv(argtree::read_file(path("all.csv"))).size(), 2u);

  r = run("significance --model-a " + path("len.ckpt") + " --model-b " + path("lr.ckpt") + " --test " +
          path("test.pairs") + " --test-b " + path("test.feat"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"significant\""), std::string::npos);
}

TEST_F(Cli, GradcheckPasses) {
  for (const std::string kind : {"logreg", "pair", "path-flat", "path-hier"}) {
    auto r = run("gradcheck --model " + kind);
    EXPECT_EQ(r.code, 0) << kind << r.out << r.err;
    EXPECT_NE(r.out.find("\"pass\": true"), std::string::npos) << kind;
  }
}

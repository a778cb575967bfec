// Copyright 2026 The AtomEdit Authors.
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

// End-to-end runs of the atomedit binary.

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "atomedit/atomic_edit.h"
#include "atomedit/locate.h"
#include "fixtures.h"

namespace atomedit {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { dir_ = testing::MakeTempDir("cli"); }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the CLI with stdout/stderr captured into files under dir_.
  int Run(const std::string &args) {
    return testing::RunCommand(testing::CliPath() + " " + args + " >" + dir_ + "/stdout 2>" +
                               dir_ + "/stderr");
  }
  std::string Stdout() const { return testing::ReadFile(dir_ + "/stdout"); }
  std::string Stderr() const { return testing::ReadFile(dir_ + "/stderr"); }

  std::string dir_;
};

TEST_F(CliTest, HelpAndUsageErrors) {
  EXPECT_EQ(Run("--help"), 0);
  EXPECT_NE(Stdout().find("extract"), std::string::npos);
  EXPECT_EQ(Run("extract --no-such-flag"), 2);
  EXPECT_EQ(Run("validate"), 2);  // --in is required
  EXPECT_EQ(Run("train-lm --in x --out y --order 0"), 2);
}

TEST_F(CliTest, MissingInputIsFatal) {
  EXPECT_EQ(Run("extract --in " + dir_ + "/absent.xml --out " + dir_ + "/out"), 1);
  EXPECT_FALSE(Stderr().empty());
  EXPECT_EQ(Run("validate --in " + dir_ + "/absent"), 1);
}

TEST_F(CliTest, ExtractValidateTrainLocate) {
  const std::string out = dir_ + "/corpus";
  ASSERT_EQ(Run("extract --in " + testing::DataDir() + "/mini_dump.xml --out " + out +
                " --jobs 2 --dump-sentences"),
            0)
      << Stderr();
  EXPECT_EQ(testing::ReadFile(out + "/edits-00000.jsonl"),
            testing::ReadFile(testing::DataDir() + "/mini_dump_golden.jsonl"));
  EXPECT_EQ(Run("validate --in " + out), 0) << Stdout() << Stderr();

  // Train on a small text and locate the extracted insertions.
  const std::string text = dir_ + "/train.txt";
  {
    std::ofstream f(text);
    for (const auto &sentence : testing::SyntheticCorpus(2000, 30, 5)) {
      for (size_t i = 0; i < sentence.size(); ++i) f << (i ? " " : "") << sentence[i];
      f << "\n";
    }
  }
  ASSERT_EQ(Run("train-lm --in " + text + " --out " + dir_ + "/model.bin --order 3 --arpa " +
                dir_ + "/model.arpa"),
            0)
      << Stderr();
  EXPECT_NE(testing::ReadFile(dir_ + "/model.arpa").find("\\data\\"), std::string::npos);
  ASSERT_EQ(Run("locate --model " + dir_ + "/model.bin --edits " + out + " --out " + dir_ +
                "/preds.jsonl"),
            0)
      << Stderr();
  std::istringstream preds(testing::ReadFile(dir_ + "/preds.jsonl"));
  const auto predictions = ReadPredictions(preds);
  EXPECT_FALSE(predictions.empty());
  EXPECT_EQ(Run("eval-locate --preds " + dir_ + "/preds.jsonl"), 0);
  EXPECT_NE(Stdout().find("accuracy"), std::string::npos);

  EXPECT_EQ(Run("locate --uniform --edits " + out + " --out " + dir_ + "/uniform.jsonl"), 0);
  EXPECT_EQ(Run("locate --edits " + out), 2);  // needs --model or --uniform
}

TEST_F(CliTest, PseudoIsDeterministic) {
  const std::string conllu = dir_ + "/tb.conllu";
  std::ofstream(conllu) << testing::GenerateTreebank(50, 9);
  ASSERT_EQ(Run("pseudo --in " + conllu + " --out " + dir_ + "/a.jsonl --seed 4 --marked " +
                dir_ + "/a.tsv"),
            0)
      << Stderr();
  ASSERT_EQ(Run("pseudo --in " + conllu + " --out " + dir_ + "/b.jsonl --seed 4"), 0);
  const std::string a = testing::ReadFile(dir_ + "/a.jsonl");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, testing::ReadFile(dir_ + "/b.jsonl"));
  EXPECT_NE(testing::ReadFile(dir_ + "/a.tsv").find("<ins>"), std::string::npos);
  EXPECT_EQ(Run("validate --in " + dir_ + "/a.jsonl"), 0) << Stdout();
}

TEST_F(CliTest, EmptyDumpSucceeds) {
  const std::string dump = dir_ + "/empty.xml";
  std::ofstream(dump) << "<mediawiki>\n</mediawiki>\n";
  EXPECT_EQ(Run("extract --in " + dump + " --out " + dir_ + "/out"), 0) << Stderr();
}

TEST_F(CliTest, EvalAnnotations) {
  const std::string path = dir_ + "/ann.tsv";
  {
    std::ofstream f(path);
    f << "record_id\tannotator_id\tjudgment\n";
    for (const Annotation &a : testing::ErrorRateFixture()) {
      f << a.record_id << "\t" << a.annotator_id << "\t"
        << (a.index ? std::to_string(*a.index) : "ERROR") << "\n";
    }
  }
  ASSERT_EQ(Run("eval-annotations --annotations " + path), 0) << Stderr();
  EXPECT_NE(Stdout().find("0.78"), std::string::npos) << Stdout();
}

}  // namespace
}  // namespace atomedit

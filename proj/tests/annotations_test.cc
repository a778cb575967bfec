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

#include "atomedit/annotations.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.h"

namespace atomedit {
namespace {

TEST(ErrorRateSummaryTest, ConstructedFixtureGivesExactFractions) {
  const ErrorRateSummary summary = SummarizeErrorRates(testing::ErrorRateFixture());
  EXPECT_EQ(summary.records, 100);
  EXPECT_EQ(summary.no_error, 0.78);
  EXPECT_EQ(summary.possible_error, 0.13);
  EXPECT_EQ(summary.clear_error, 0.09);
  EXPECT_EQ(summary.no_error_count, 78);
}

TEST(ErrorRateSummaryTest, SingleRecords) {
  const std::vector<Annotation> unanimous = {{"r", "a", 1}, {"r", "b", 2}};
  const ErrorRateSummary s1 = SummarizeErrorRates(unanimous);
  EXPECT_EQ(s1.no_error, 1.0);
  EXPECT_EQ(s1.possible_error, 0.0);
  EXPECT_EQ(s1.clear_error, 0.0);
  const std::vector<Annotation> mixed = {{"r", "a", 1}, {"r", "b", std::nullopt}};
  const ErrorRateSummary s2 = SummarizeErrorRates(mixed);
  EXPECT_EQ(s2.no_error, 0.0);
  EXPECT_EQ(s2.possible_error, 1.0);
  EXPECT_EQ(s2.clear_error, 0.0);
}

TEST(ErrorRateSummaryTest, UnannotatedRecordsCountedSeparately) {
  const std::vector<Annotation> annotations = {{"r1", "a", 0}};
  const std::vector<std::string> expected = {"r1", "r2", "r3"};
  const ErrorRateSummary s = SummarizeErrorRates(annotations, expected);
  EXPECT_EQ(s.records, 1);
  EXPECT_EQ(s.unannotated, 2);
  EXPECT_EQ(s.no_error, 1.0);
}

TEST(ErrorRateSummaryTest, OrderIndependent) {
  auto annotations = testing::ErrorRateFixture();
  const ErrorRateSummary a = SummarizeErrorRates(annotations);
  std::reverse(annotations.begin(), annotations.end());
  const ErrorRateSummary b = SummarizeErrorRates(annotations);
  EXPECT_EQ(a.no_error, b.no_error);
  EXPECT_EQ(a.possible_error, b.possible_error);
}

TEST(ReadAnnotationsTest, ParsesHeaderAndErrors) {
  std::istringstream in("record_id\tannotator_id\tjudgment\nr1\ta\t3\nr1\tb\tERROR\n");
  const auto annotations = ReadAnnotations(in);
  ASSERT_EQ(annotations.size(), 2u);
  EXPECT_EQ(annotations[0].index, 3u);
  EXPECT_FALSE(annotations[1].index);
  std::istringstream bad("r1\ta\tmaybe\n");
  EXPECT_THROW(ReadAnnotations(bad), std::runtime_error);
  std::istringstream short_line("r1\ta\n");
  EXPECT_THROW(ReadAnnotations(short_line), std::runtime_error);
}

AtomicEdit Gold(const std::string &id, const std::string &base, std::optional<size_t> index) {
  AtomicEdit edit;
  edit.id = id;
  edit.kind = EditKind::kInsertion;
  edit.base_sentence = Tokenize(base, "en");
  edit.token_aligned = index.has_value();
  edit.token_index = index;
  return edit;
}

TEST(AnnotatorAgreementTest, TwoOfThreeMatch) {
  const std::vector<AtomicEdit> gold = {Gold("r", "a b c", 2)};
  const std::vector<Annotation> annotations = {{"r", "x", 2}, {"r", "y", 2}, {"r", "z", 1}};
  const AgreementReport report = AnnotatorAgreement(annotations, gold);
  EXPECT_DOUBLE_EQ(report.per_annotation, 2.0 / 3.0);
  EXPECT_EQ(report.annotations_compared, 3);
}

TEST(AnnotatorAgreementTest, ErrorJudgmentIsDisagreement) {
  const std::vector<AtomicEdit> gold = {Gold("r", "a b c", 1)};
  const std::vector<Annotation> annotations = {{"r", "x", 1}, {"r", "y", std::nullopt}};
  EXPECT_DOUBLE_EQ(AnnotatorAgreement(annotations, gold).per_annotation, 0.5);
}

TEST(AnnotatorAgreementTest, PerRecordIsMacroAveraged) {
  const std::vector<AtomicEdit> gold = {Gold("r1", "a b", 0), Gold("r2", "a b", 1)};
  const std::vector<Annotation> annotations = {
      {"r1", "x", 0}, {"r1", "y", 0}, {"r1", "z", 0}, {"r2", "x", 2}};
  const AgreementReport report = AnnotatorAgreement(annotations, gold);
  EXPECT_DOUBLE_EQ(report.per_annotation, 0.75);
  EXPECT_DOUBLE_EQ(report.per_record, 0.5);
  EXPECT_EQ(report.records_compared, 2);
}

TEST(AnnotatorAgreementTest, MissingIdsAndBadIndices) {
  const std::vector<AtomicEdit> gold = {Gold("r1", "a b", 0)};
  const std::vector<Annotation> missing = {{"r1", "x", 0}, {"r9", "x", 0}, {"r7", "x", 0}};
  try {
    AnnotatorAgreement(missing, gold);
    FAIL() << "expected MissingRecordError";
  } catch (const MissingRecordError &e) {
    EXPECT_NE(std::string(e.what()).find("r7"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("r9"), std::string::npos);
  }
  const std::vector<Annotation> out_of_range = {{"r1", "x", 3}};
  EXPECT_THROW(AnnotatorAgreement(out_of_range, gold), std::invalid_argument);
}

TEST(AnnotatorAgreementTest, UnalignedGoldExcluded) {
  const std::vector<AtomicEdit> gold = {Gold("r1", "a b", 0), Gold("r2", "a b", std::nullopt)};
  const std::vector<Annotation> annotations = {{"r1", "x", 0}, {"r2", "x", 1}};
  const AgreementReport report = AnnotatorAgreement(annotations, gold);
  EXPECT_EQ(report.excluded_unaligned, 1);
  EXPECT_EQ(report.annotations_compared, 1);
  EXPECT_DOUBLE_EQ(report.per_annotation, 1.0);
}

TEST(ExactMatchTest, RankCutoff) {
  Proposals p{"r", {}};
  for (int i = 1; i <= 12; ++i) p.phrases.push_back("p" + std::to_string(i));
  std::unordered_map<std::string, std::string> gold = {{"r", "p7"}};
  const std::vector<Proposals> proposals = {p};
  EXPECT_EQ(ExactMatchAtK(proposals, gold, 10), 1.0);
  gold["r"] = "p11";
  EXPECT_EQ(ExactMatchAtK(proposals, gold, 10), 0.0);
  gold["r"] = "  p11 ";
  EXPECT_EQ(ExactMatchAtK(proposals, gold, 11), 1.0);
}

TEST(ExactMatchTest, Errors) {
  const std::vector<Proposals> proposals = {{"r", {"a"}}};
  const std::unordered_map<std::string, std::string> gold = {{"r", "a"}};
  EXPECT_THROW(ExactMatchAtK(proposals, gold, 0), std::invalid_argument);
  EXPECT_THROW(ExactMatchAtK(proposals, {}, 1), MissingRecordError);
  const std::vector<Proposals> empty_list = {{"r", {}}};
  EXPECT_THROW(ExactMatchAtK(empty_list, gold, 1), std::invalid_argument);
}

TEST(ExactMatchTest, MonotoneInK) {
  std::mt19937_64 rng(41);
  const std::vector<std::string> words = {"a", "b", "c", "d"};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Proposals> proposals;
    std::unordered_map<std::string, std::string> gold;
    for (int r = 0; r < 5; ++r) {
      Proposals p{"r" + std::to_string(r), {}};
      for (size_t k = 0, n = 1 + rng() % 8; k < n; ++k) p.phrases.push_back(words[rng() % 4]);
      gold[p.record_id] = words[rng() % 4];
      proposals.push_back(p);
    }
    double previous = 0.0;
    for (size_t k = 1; k <= 9; ++k) {
      const double value = ExactMatchAtK(proposals, gold, k);
      EXPECT_GE(value, previous);
      EXPECT_LE(value, 1.0);
      previous = value;
    }
  }
}

TEST(ReadProposalsTest, Jsonl) {
  std::istringstream in("{\"record_id\": \"r1\", \"phrases\": [\"in 1949\", \"later\"]}\n\n");
  const auto proposals = ReadProposals(in);
  ASSERT_EQ(proposals.size(), 1u);
  EXPECT_EQ(proposals[0].phrases[1], "later");
}

EmbeddingTable TwoWordTable() {
  EmbeddingTable table;
  table.Add("north", {1.0, 0.0});
  table.Add("east", {0.0, 1.0});
  return table;
}

TEST(SimilarityTest, IdenticalIsOneOrthogonalIsZero) {
  const EmbeddingTable table = TwoWordTable();
  std::unordered_map<std::string, std::string> gold = {{"r", "north"}};
  const std::vector<Proposals> same = {{"r", {"north"}}};
  EXPECT_DOUBLE_EQ(SimilarityAt1(same, gold, table), 1.0);
  const std::vector<Proposals> orthogonal = {{"r", {"east", "north"}}};
  EXPECT_DOUBLE_EQ(SimilarityAt1(orthogonal, gold, table), 0.0);
  const std::vector<Proposals> unknown = {{"r", {"zzz"}}};
  EXPECT_DOUBLE_EQ(SimilarityAt1(unknown, gold, table), 0.0);
}

TEST(SimilarityTest, CosineProperties) {
  EXPECT_EQ(Cosine(std::vector<double>{0, 0}, std::vector<double>{1, 2}), 0.0);
  EXPECT_DOUBLE_EQ(Cosine(std::vector<double>{1, 1}, std::vector<double>{-2, -2}), -1.0);
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> a(4), b(4);
    for (double &v : a) v = static_cast<double>(rng() % 200) - 100.0;
    for (double &v : b) v = static_cast<double>(rng() % 200) - 100.0;
    const double c = Cosine(a, b);
    EXPECT_GE(c, -1.0);
    EXPECT_LE(c, 1.0);
    EXPECT_DOUBLE_EQ(c, Cosine(b, a));
  }
}

TEST(EmbeddingTableTest, ReadsTextFormat) {
  std::istringstream in("2 3\nnorth 1 0 0\neast 0 1 0\n");
  const EmbeddingTable table = EmbeddingTable::Read(in);
  EXPECT_EQ(table.size(), 2u);
  EXPECT_EQ(table.dimension(), 3u);
  const std::vector<std::string> words = {"north", "east", "missing"};
  EXPECT_EQ(table.PhraseVector(words), (std::vector<double>{1, 1, 0}));
  std::istringstream bad("north 1 0\neast 0 1 0\n");
  EXPECT_THROW(EmbeddingTable::Read(bad), std::runtime_error);
}

}  // namespace
}  // namespace atomedit

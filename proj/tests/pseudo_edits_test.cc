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

#include "atomedit/pseudo_edits.h"

#include <algorithm>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.h"

namespace atomedit {
namespace {

ParsedSentence MakeParse(const std::vector<std::string> &forms, const std::vector<std::string> &upos,
                         const std::vector<size_t> &heads, const std::vector<std::string> &deprels) {
  ParsedSentence s;
  s.sent_id = "t1";
  s.forms = forms;
  s.upos = upos;
  s.heads = heads;
  s.deprels = deprels;
  s.space_after.assign(forms.size(), true);
  return s;
}

// "The cat sat on the mat": "on" attaches to "sat" and heads "the mat".
ParsedSentence CatSentence() {
  return MakeParse({"The", "cat", "sat", "on", "the", "mat"},
                   {"DET", "NOUN", "VERB", "ADP", "DET", "NOUN"}, {2, 3, 0, 3, 6, 4},
                   {"det", "nsubj", "root", "obl", "det", "obj"});
}

bool HasSpan(const std::vector<SubtreeSpan> &spans, size_t start, size_t end) {
  return std::any_of(spans.begin(), spans.end(),
                     [&](const SubtreeSpan &s) { return s.start == start && s.end == end; });
}

TEST(SubtreeSpansTest, CatSentence) {
  const auto spans = SubtreeSpans(CatSentence());
  EXPECT_TRUE(HasSpan(spans, 3, 5));   // on the mat
  EXPECT_FALSE(HasSpan(spans, 0, 1));  // The cat: subject
  EXPECT_FALSE(HasSpan(spans, 0, 5));  // whole sentence
  EXPECT_TRUE(HasSpan(spans, 0, 0));   // The
  EXPECT_TRUE(std::is_sorted(spans.begin(), spans.end(), [](const auto &a, const auto &b) {
    return std::tie(a.start, a.end) < std::tie(b.start, b.end);
  }));
}

TEST(SubtreeSpansTest, NonContiguousSubtreeExcluded) {
  // Token 0 heads token 2, but token 1 belongs elsewhere.
  const ParsedSentence s = MakeParse({"a", "b", "c", "d"}, {"X", "X", "X", "X"}, {4, 4, 1, 0},
                                     {"obj", "obl", "amod", "root"});
  const auto spans = SubtreeSpans(s);
  EXPECT_FALSE(HasSpan(spans, 0, 2));
  EXPECT_TRUE(HasSpan(spans, 2, 2));
  EXPECT_TRUE(HasSpan(spans, 1, 1));
}

TEST(SubtreeSpansTest, SubjectSubtypesAndLonePunctuationExcluded) {
  EXPECT_TRUE(IsSubjectRelation("nsubj"));
  EXPECT_TRUE(IsSubjectRelation("nsubj:pass"));
  EXPECT_FALSE(IsSubjectRelation("obj"));
  EXPECT_FALSE(IsSubjectRelation("csubj"));
  const ParsedSentence s = MakeParse({"Dogs", "bark", "."}, {"NOUN", "VERB", "PUNCT"}, {2, 0, 2},
                                     {"nsubj:pass", "root", "punct"});
  EXPECT_TRUE(SubtreeSpans(s).empty());
  EXPECT_FALSE(GeneratePseudoEdit(s, 1, "en"));
}

TEST(SubtreeSpansTest, AgreeWithDescendantEnumerationOnGeneratedTrees) {
  std::istringstream in(testing::GenerateTreebank(500, 31));
  for (const ConlluBlock &block : ReadConllu(in)) {
    ASSERT_TRUE(block.sentence) << block.error;
    std::vector<testing::OracleSpan> library;
    for (const SubtreeSpan &s : SubtreeSpans(*block.sentence)) {
      library.push_back({s.root, s.start, s.end});
    }
    std::sort(library.begin(), library.end());
    EXPECT_EQ(library, testing::DescendantEnumerationSpans(*block.sentence)) << block.sent_id;
  }
}

TEST(PseudoEditTest, OnTheMatReconstructsExactly) {
  const ParsedSentence s = CatSentence();
  const AtomicEdit edit = MakePseudoEdit(s, {3, 3, 5, false}, "en");
  EXPECT_EQ(edit.phrase_tokens, (std::vector<std::string>{"on", "the", "mat"}));
  EXPECT_EQ(edit.phrase, " on the mat");
  EXPECT_EQ(edit.base_sentence.text, "The cat sat");
  EXPECT_EQ(edit.edited_sentence.text, "The cat sat on the mat");
  EXPECT_EQ(edit.token_index, 3u);
  EXPECT_EQ(edit.provenance, "pseudo");
  EXPECT_EQ(edit.kind, EditKind::kInsertion);
  EXPECT_TRUE(testing::CheckPseudoEdit(s, edit).empty());

  // Some seed draws this span; the draw itself is sound.
  bool drawn = false;
  for (uint64_t seed = 0; seed < 64 && !drawn; ++seed) {
    const auto generated = GeneratePseudoEdit(s, seed, "en");
    ASSERT_TRUE(generated);
    EXPECT_TRUE(testing::CheckPseudoEdit(s, *generated).empty());
    drawn = generated->phrase_tokens == edit.phrase_tokens;
    if (drawn) {
      EXPECT_EQ(ToJsonLine(*generated), ToJsonLine(edit));
    }
  }
  EXPECT_TRUE(drawn);
}

TEST(PseudoEditTest, SameSeedSameRecord) {
  const ParsedSentence s = CatSentence();
  for (uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(ToJsonLine(*GeneratePseudoEdit(s, seed, "en")),
              ToJsonLine(*GeneratePseudoEdit(s, seed, "en")));
  }
  EXPECT_EQ(DeriveSentenceSeed(5, 9), DeriveSentenceSeed(5, 9));
  EXPECT_NE(DeriveSentenceSeed(5, 9), DeriveSentenceSeed(5, 10));
  EXPECT_NE(DeriveSentenceSeed(5, 9), DeriveSentenceSeed(6, 9));
}

TEST(PseudoEditTest, WhitespaceHandlingWithSpaceAfterNo) {
  // "Hello, big world!" with SpaceAfter=No on "Hello" and "world".
  ParsedSentence s = MakeParse({"Hello", ",", "big", "world", "!"},
                               {"INTJ", "PUNCT", "ADJ", "NOUN", "PUNCT"}, {0, 1, 4, 1, 1},
                               {"root", "punct", "amod", "vocative", "punct"});
  s.space_after = {false, true, true, false, true};
  for (const SubtreeSpan &span : SubtreeSpans(s)) {
    const AtomicEdit edit = MakePseudoEdit(s, span, "en");
    EXPECT_TRUE(testing::CheckPseudoEdit(s, edit).empty()) << edit.phrase;
  }
}

TEST(PseudoEditTest, GeneratedCorpusIsSound) {
  std::istringstream in(testing::GenerateTreebank(1000, 32));
  size_t ordinal = 0;
  size_t generated = 0;
  for (const ConlluBlock &block : ReadConllu(in)) {
    const auto edit = GeneratePseudoEdit(*block.sentence, DeriveSentenceSeed(3, ordinal++), "en");
    if (!edit) continue;
    ++generated;
    const auto problems = testing::CheckPseudoEdit(*block.sentence, *edit);
    EXPECT_TRUE(problems.empty()) << problems.front();
  }
  EXPECT_GT(generated, 500u);
}

TEST(EmitMarkedTest, AngelExample) {
  const std::vector<std::string> forms = {"''",  "Angel", "''",      "is",  "a",
                                          "song", "recorded", "by", "the", "British",
                                          "pop", "music", "duo", "Eurythmics", "."};
  std::vector<std::string> upos(forms.size(), "NOUN");
  std::vector<size_t> heads(forms.size(), 6);
  std::vector<std::string> deprels(forms.size(), "dep");
  heads[5] = 0;
  deprels[5] = "root";
  heads[9] = 9;  // "British" under "the"
  const ParsedSentence s = MakeParse(forms, upos, heads, deprels);
  const AtomicEdit edit = MakePseudoEdit(s, {8, 8, 9, false}, "en");
  EXPECT_EQ(EmitMarked(edit),
            "'' Angel '' is a song recorded by <ins> pop music duo Eurythmics .");
  EXPECT_EQ(edit.phrase, "the British ");
  EXPECT_EQ(edit.token_index, 8u);
}

TEST(EmitMarkedTest, IndexZeroAndUnaligned) {
  const ParsedSentence s = CatSentence();
  const AtomicEdit first = MakePseudoEdit(s, {0, 0, 0, false}, "en");
  EXPECT_EQ(EmitMarked(first), "<ins> cat sat on the mat");
  AtomicEdit unaligned = first;
  unaligned.token_aligned = false;
  unaligned.token_index.reset();
  EXPECT_THROW(EmitMarked(unaligned), std::invalid_argument);
}

}  // namespace
}  // namespace atomedit

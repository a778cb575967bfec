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

// Test fixtures shared by the unit tests and the acceptance runner:
// deterministic input generators and brute-force reference implementations
// that deliberately avoid reusing library code paths.

#ifndef ATOMEDIT_TESTS_SUPPORT_FIXTURES_H_
#define ATOMEDIT_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "atomedit/align.h"
#include "atomedit/annotations.h"
#include "atomedit/atomic_edit.h"
#include "atomedit/conllu.h"
#include "atomedit/corpus_stats.h"
#include "atomedit/text.h"

namespace atomedit::testing {

// Directory holding the frozen golden files.
std::string DataDir();
// Path of the built command-line tool.
std::string CliPath();

// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string ReadFile(const std::string &path);

// A fresh empty directory under the system temp directory.
std::string MakeTempDir(const std::string &prefix);

// Runs a shell command; returns its exit status (or -1 if it was killed).
int RunCommand(const std::string &command);

// --- Atomic diff -----------------------------------------------------------

// Every byte offset a such that t == s[0, a) + p + s[a, |s|) for some
// non-empty p, found by trying all splits of t.
std::vector<size_t> BruteForceInsertionOffsets(const std::string &s, const std::string &t);

// All strings over `alphabet` of length 0..max_length, shortest first.
std::vector<std::string> EnumerateStrings(const std::string &alphabet, size_t max_length);

// --- Sentence alignment ------------------------------------------------------

struct SnapshotPairFixture {
  std::vector<Sentence> base;
  std::vector<Sentence> edited;
};

// A base snapshot of 10-50 sentences and an edited copy with 1-3 local
// edits: phrase insertions or deletions inside sentences, and blocks of
// sentences inserted or removed with at most five sentences moved in total,
// so no surviving sentence is displaced by more than five positions. Words
// are unique to their sentence, so unrelated sentences share no tokens.
SnapshotPairFixture GenerateSnapshotPair(std::mt19937_64 &rng);

// Twenty sentences; the edited copy has `displacement` new sentences in
// front and one word inserted into base sentence 2, which therefore sits at
// edited index 2 + displacement.
SnapshotPairFixture DisplacedEditFixture(size_t displacement);

// Quadratic alignment written directly from the definition: for each base
// sentence not identical to its same-index counterpart, the edited sentence
// with the highest BLEU (ties: smaller |j - i|, then smaller j), kept when it
// reaches min_bleu and differs in text.
std::vector<AlignedPair> ReferenceAlign(const std::vector<Sentence> &base,
                                        const std::vector<Sentence> &edited,
                                        const AlignConfig &config);

// --- Language model ----------------------------------------------------------

// Sentences of Zipf-distributed words from a vocabulary of `vocab_size`
// types, lengths 4-16, until at least `total_tokens` tokens are produced.
std::vector<std::vector<std::string>> SyntheticCorpus(size_t total_tokens, size_t vocab_size,
                                                      uint64_t seed);

struct HeldInEdit {
  std::vector<std::string> base_tokens;
  std::vector<std::string> phrase_tokens;
  size_t gold_index = 0;
};

// Removes a 1-3 token span from `count` distinct corpus sentences of at
// least four tokens.
std::vector<HeldInEdit> HeldInEdits(const std::vector<std::vector<std::string>> &corpus,
                                    size_t count, uint64_t seed);

// --- Dependency trees --------------------------------------------------------

// CoNLL-U text with `count` random sentences of 1-18 tokens. Trees mix
// projective and non-projective shapes, subject relations (including
// subtypes), punctuation, SpaceAfter=No, multiword-token lines and empty
// nodes.
std::string GenerateTreebank(size_t count, uint64_t seed);

struct OracleSpan {
  size_t root;
  size_t start;
  size_t end;
  bool operator<(const OracleSpan &other) const {
    return std::tie(start, end, root) < std::tie(other.start, other.end, other.root);
  }
  bool operator==(const OracleSpan &other) const = default;
};

// Eligible spans by explicit descendant enumeration: for every node, walk
// its children lists to collect the subtree, keep it if the positions are
// contiguous, it is not the whole sentence, the node is not a subject
// (nsubj or nsubj:*) and it is not a lone PUNCT token.
std::vector<OracleSpan> DescendantEnumerationSpans(const ParsedSentence &sentence);

// Problems with a pseudo-edit judged against its source parse: contiguity,
// full subtree, non-subject, token split and byte-exact reconstruction.
// Empty when the edit is sound.
std::vector<std::string> CheckPseudoEdit(const ParsedSentence &sentence, const AtomicEdit &edit);

// --- Annotations and statistics ----------------------------------------------

// 100 records with three annotators each: 78 unanimous indices, 13 mixed and
// 9 unanimous ERROR judgments.
std::vector<Annotation> ErrorRateFixture();

struct RateFixture {
  std::vector<AtomicEdit> edits;
  TagSidecar tags;
  std::vector<TaggedToken> background;
};

// 1000 single-word JJ insertions of which 34 are "former", other-POS
// insertions, and a background with 1000 JJ tokens of which 6 are "former".
RateFixture FormerRateFixture();

}  // namespace atomedit::testing

#endif  // ATOMEDIT_TESTS_SUPPORT_FIXTURES_H_

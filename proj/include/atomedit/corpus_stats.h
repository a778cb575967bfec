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

// Corpus statistics over mined edits: POS distributions of inserted words,
// per-thousand insertion rates against a background corpus, and phrase
// length histograms. POS tags are read from external files.

#ifndef ATOMEDIT_CORPUS_STATS_H_
#define ATOMEDIT_CORPUS_STATS_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "atomedit/atomic_edit.h"

namespace atomedit {

struct TaggedToken {
  std::string surface;
  std::string pos;
};

// POS tags for the phrase tokens of each record, keyed by record id. Read
// from a TSV sidecar with columns record_id, token_index, surface, pos,
// where token_index counts phrase tokens from 0. An optional header line
// "# tagset: <name>" declares the tagset.
struct TagSidecar {
  std::string tagset;
  std::unordered_map<std::string, std::vector<TaggedToken>> phrases;
};

TagSidecar ReadTagSidecar(std::istream &in);

// Background corpus tokens. Accepts CoNLL-U (UPOS by default, XPOS when
// use_xpos) or two-column "surface<TAB>pos" lines. A "# tagset: <name>"
// comment sets the tagset.
struct BackgroundCorpus {
  std::string tagset;
  std::vector<TaggedToken> tokens;
};

BackgroundCorpus ReadBackgroundConllu(std::istream &in, bool use_xpos = false);
BackgroundCorpus ReadBackgroundTsv(std::istream &in);

// Which edits count as "inserted words".
struct EditSelection {
  bool single_word_only = true;
  bool insertions_only = true;
};

struct PosDistribution {
  std::map<std::string, double> frequency;  // sums to 1 unless empty
  std::map<std::string, int64_t> counts;
  int64_t untagged = 0;  // selected edits missing from the sidecar
  int64_t total = 0;     // tagged tokens counted
};

PosDistribution ComputePosDistribution(std::span<const AtomicEdit> edits,
                                       const TagSidecar &tags,
                                       const EditSelection &selection);

PosDistribution ComputeBackgroundDistribution(std::span<const TaggedToken> tokens);

struct RateRatio {
  std::string word;
  std::string pos;
  double rate_insertion = 0.0;  // per 1000 inserted words with this POS
  double rate_general = 0.0;    // per 1000 background words with this POS
  int64_t count_insertion = 0;
  int64_t count_general = 0;
  // count_general was 0 and rate_general uses a count of 1 instead.
  bool smoothed = false;

  double ratio() const { return rate_insertion / rate_general; }
};

class UnknownTagError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RateOptions {
  std::string pos;
  size_t top_n = 0;  // 0 keeps everything
  int64_t min_count = 5;
  bool ascending = false;  // list under-inserted words first
  EditSelection selection;
};

// For each word w tagged pos: rate_insertion = 1000 * (insertions of w) /
// (insertions of any pos word), and likewise over the background. Words
// with fewer than min_count insertions are skipped. Sorted by ratio
// (descending unless options.ascending), ties by word. Throws
// UnknownTagError when pos occurs in neither input.
std::vector<RateRatio> ComputeRateRatios(std::span<const AtomicEdit> edits,
                                         const TagSidecar &tags,
                                         std::span<const TaggedToken> background,
                                         const RateOptions &options);

struct LengthHistogram {
  std::map<size_t, int64_t> counts;  // phrase token length -> edits
  int64_t total = 0;
  double fraction_single = 0.0;        // length == 1
  double fraction_shorter_than_5 = 0.0;  // length < 5
};

LengthHistogram ComputeLengthHistogram(std::span<const AtomicEdit> edits);

}  // namespace atomedit

#endif  // ATOMEDIT_CORPUS_STATS_H_

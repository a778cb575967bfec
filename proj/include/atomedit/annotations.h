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

// Analyses over human judgments of mined edits (how often annotators flag an
// edit as an error, how often they agree with the original editor) and
// scores for generated phrase proposals (exact match within the top k,
// embedding similarity of the top proposal).
//
// Every reduction sorts its inputs by record id first, so results do not
// depend on input order.

#ifndef ATOMEDIT_ANNOTATIONS_H_
#define ATOMEDIT_ANNOTATIONS_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "atomedit/atomic_edit.h"

namespace atomedit {

// One annotator's judgment on one record: the token index where they would
// insert the phrase, or nullopt when they marked the edit as an error.
struct Annotation {
  std::string record_id;
  std::string annotator_id;
  std::optional<size_t> index;
};

// TSV lines "record_id<TAB>annotator_id<TAB>judgment", where judgment is a
// non-negative integer or the literal ERROR. A first line whose judgment
// column reads "judgment" is a header. Throws std::runtime_error naming the
// line on malformed input.
std::vector<Annotation> ReadAnnotations(std::istream &in);

struct ErrorRateSummary {
  double no_error = 0.0;        // every annotator gave an index
  double possible_error = 0.0;  // mixed
  double clear_error = 0.0;     // every annotator marked an error
  int64_t records = 0;          // records with at least one annotation
  int64_t no_error_count = 0;
  int64_t possible_error_count = 0;
  int64_t clear_error_count = 0;
  // Ids listed in expected_records that received no annotation.
  int64_t unannotated = 0;
};

ErrorRateSummary SummarizeErrorRates(std::span<const Annotation> annotations,
                                     std::span<const std::string> expected_records = {});

struct AgreementReport {
  // Matching (annotator, record) pairs over all compared pairs.
  double per_annotation = 0.0;
  // Mean over records of the per-record match fraction.
  double per_record = 0.0;
  int64_t annotations_compared = 0;
  int64_t records_compared = 0;
  // Annotations skipped because the gold edit is not token aligned.
  int64_t excluded_unaligned = 0;
};

class MissingRecordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Compares each index judgment with the gold token_index; ERROR judgments
// count as disagreement. Throws MissingRecordError listing every annotated
// id absent from gold, and std::invalid_argument for an index outside
// [0, len(shorter tokens)].
AgreementReport AnnotatorAgreement(std::span<const Annotation> annotations,
                                   std::span<const AtomicEdit> gold);

// Ranked phrase proposals for one record.
struct Proposals {
  std::string record_id;
  std::vector<std::string> phrases;
};

// JSONL lines {"record_id": ..., "phrases": [...]}.
std::vector<Proposals> ReadProposals(std::istream &in);

// Fraction of records whose gold phrase appears among the first k
// proposals, comparing after trimming and collapsing whitespace
// (case-sensitive). Throws MissingRecordError when a record has no gold
// phrase and std::invalid_argument for an empty proposal list or k == 0.
double ExactMatchAtK(std::span<const Proposals> proposals,
                     const std::unordered_map<std::string, std::string> &gold, size_t k);

class EmbeddingTable {
 public:
  // Text format: one "word v1 ... vd" line per word, values space
  // separated. A leading "<count> <dimension>" line is recognized and
  // skipped. Throws std::runtime_error on inconsistent dimensions.
  static EmbeddingTable Read(std::istream &in);
  static EmbeddingTable ReadFile(const std::string &path);

  size_t dimension() const { return dimension_; }
  size_t size() const { return vectors_.size(); }
  void Add(const std::string &word, std::vector<double> vector);

  // Sum of word vectors; unknown words contribute nothing.
  std::vector<double> PhraseVector(std::span<const std::string> words) const;

 private:
  size_t dimension_ = 0;
  std::unordered_map<std::string, std::vector<double>> vectors_;
};

// Cosine similarity; 0 when either vector is all zeros.
double Cosine(std::span<const double> a, std::span<const double> b);

// Mean cosine between the top proposal and the gold phrase, each embedded
// as the sum of its token vectors (tokenized for `language`).
double SimilarityAt1(std::span<const Proposals> proposals,
                     const std::unordered_map<std::string, std::string> &gold,
                     const EmbeddingTable &table, std::string_view language = "en");

}  // namespace atomedit

#endif  // ATOMEDIT_ANNOTATIONS_H_

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

// Insertion-point prediction with a language model: try the phrase at every
// token gap of the base sentence and keep the candidate with the lowest
// perplexity.

#ifndef ATOMEDIT_LOCATE_H_
#define ATOMEDIT_LOCATE_H_

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "atomedit/atomic_edit.h"
#include "atomedit/ngram_model.h"

namespace atomedit {

struct LocatePrediction {
  std::string record_id;
  size_t predicted_index = 0;
  std::optional<size_t> gold_index;
  // perplexities[i] scores the phrase inserted before base token i; one entry
  // per gap, len(base) + 1 in total.
  std::vector<double> perplexities;
  std::string category;
};

// Throws std::invalid_argument when either token list is empty. Ties go to
// the smallest index.
LocatePrediction Locate(const SentenceScorer &scorer, std::span<const std::string> base_tokens,
                        std::span<const std::string> phrase_tokens);

// Locates the phrase of a token-aligned edit in its shorter sentence and
// fills record_id, gold_index and category from the record. Throws
// std::invalid_argument for edits that are not token aligned.
LocatePrediction LocateEdit(const SentenceScorer &scorer, const AtomicEdit &edit);

struct AccuracyCell {
  int64_t correct = 0;
  int64_t total = 0;
  double accuracy() const { return total == 0 ? 0.0 : static_cast<double>(correct) / total; }
};

struct AccuracyReport {
  AccuracyCell overall;
  // Only records with a non-empty category contribute here.
  std::map<std::string, AccuracyCell> by_category;
};

// Throws std::invalid_argument naming the first record without a gold index.
AccuracyReport EvalAccuracy(std::span<const LocatePrediction> predictions);

std::string PredictionToJsonLine(const LocatePrediction &prediction);
LocatePrediction ParsePredictionJson(std::string_view line);
std::vector<LocatePrediction> ReadPredictions(std::istream &in);

std::string AccuracyReportJson(const AccuracyReport &report);

}  // namespace atomedit

#endif  // ATOMEDIT_LOCATE_H_

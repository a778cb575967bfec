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

#include "atomedit/locate.h"

#include <stdexcept>

#include "json.hpp"

namespace atomedit {

using ordered_json = nlohmann::ordered_json;

LocatePrediction Locate(const SentenceScorer &scorer, std::span<const std::string> base_tokens,
                        std::span<const std::string> phrase_tokens) {
  if (base_tokens.empty()) throw std::invalid_argument("locate: empty base sentence");
  if (phrase_tokens.empty()) throw std::invalid_argument("locate: empty phrase");

  LocatePrediction prediction;
  std::vector<std::string> candidate;
  candidate.reserve(base_tokens.size() + phrase_tokens.size());
  for (size_t index = 0; index <= base_tokens.size(); ++index) {
    candidate.assign(base_tokens.begin(), base_tokens.begin() + index);
    candidate.insert(candidate.end(), phrase_tokens.begin(), phrase_tokens.end());
    candidate.insert(candidate.end(), base_tokens.begin() + index, base_tokens.end());
    const double perplexity = scorer.Perplexity(candidate);
    prediction.perplexities.push_back(perplexity);
    if (perplexity < prediction.perplexities[prediction.predicted_index]) {
      prediction.predicted_index = index;
    }
  }
  return prediction;
}

LocatePrediction LocateEdit(const SentenceScorer &scorer, const AtomicEdit &edit) {
  if (!edit.token_aligned || !edit.token_index) {
    throw std::invalid_argument("locate: record " + edit.id + " is not token aligned");
  }
  LocatePrediction prediction = Locate(scorer, edit.shorter().tokens, edit.phrase_tokens);
  prediction.record_id = edit.id;
  prediction.gold_index = edit.token_index;
  prediction.category = edit.category;
  return prediction;
}

AccuracyReport EvalAccuracy(std::span<const LocatePrediction> predictions) {
  AccuracyReport report;
  for (const LocatePrediction &p : predictions) {
    if (!p.gold_index) {
      throw std::invalid_argument("prediction " + p.record_id + " has no gold index");
    }
    const bool correct = p.predicted_index == *p.gold_index;
    report.overall.correct += correct;
    ++report.overall.total;
    if (!p.category.empty()) {
      AccuracyCell &cell = report.by_category[p.category];
      cell.correct += correct;
      ++cell.total;
    }
  }
  return report;
}

std::string PredictionToJsonLine(const LocatePrediction &prediction) {
  ordered_json j;
  j["record_id"] = prediction.record_id;
  j["predicted_index"] = prediction.predicted_index;
  j["gold_index"] = prediction.gold_index ? ordered_json(*prediction.gold_index) : nullptr;
  j["perplexities"] = prediction.perplexities;
  if (!prediction.category.empty()) j["category"] = prediction.category;
  return j.dump();
}

LocatePrediction ParsePredictionJson(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error &e) {
    throw RecordFormatError(std::string("malformed prediction: ") + e.what());
  }
  LocatePrediction p;
  try {
    p.record_id = j.at("record_id").get<std::string>();
    p.predicted_index = j.at("predicted_index").get<size_t>();
    if (j.contains("gold_index") && !j["gold_index"].is_null()) {
      p.gold_index = j["gold_index"].get<size_t>();
    }
    if (j.contains("perplexities")) {
      p.perplexities = j["perplexities"].get<std::vector<double>>();
    }
    if (j.contains("category")) p.category = j["category"].get<std::string>();
  } catch (const nlohmann::json::exception &e) {
    throw RecordFormatError(std::string("bad prediction record: ") + e.what());
  }
  return p;
}

std::vector<LocatePrediction> ReadPredictions(std::istream &in) {
  std::vector<LocatePrediction> out;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(ParsePredictionJson(line));
    } catch (const RecordFormatError &e) {
      throw RecordFormatError("line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  return out;
}

std::string AccuracyReportJson(const AccuracyReport &report) {
  auto cell_json = [](const AccuracyCell &cell) {
    ordered_json j;
    j["accuracy"] = cell.accuracy();
    j["correct"] = cell.correct;
    j["total"] = cell.total;
    return j;
  };
  ordered_json j = cell_json(report.overall);
  if (!report.by_category.empty()) {
    ordered_json categories = ordered_json::object();
    for (const auto &[name, cell] : report.by_category) categories[name] = cell_json(cell);
    j["by_category"] = std::move(categories);
  }
  return j.dump(2);
}

}  // namespace atomedit

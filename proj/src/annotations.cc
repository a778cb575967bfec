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
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace atomedit {

namespace {

std::vector<std::string> SplitTabs(std::string_view line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    fields.emplace_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

std::vector<std::string> SplitSpaces(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

// Annotations grouped by record id, in id order.
std::map<std::string, std::vector<const Annotation *>> GroupByRecord(
    std::span<const Annotation> annotations) {
  std::map<std::string, std::vector<const Annotation *>> groups;
  for (const Annotation &a : annotations) groups[a.record_id].push_back(&a);
  return groups;
}

std::vector<const Proposals *> SortedById(std::span<const Proposals> proposals) {
  std::vector<const Proposals *> sorted;
  for (const Proposals &p : proposals) sorted.push_back(&p);
  std::stable_sort(sorted.begin(), sorted.end(), [](const Proposals *a, const Proposals *b) {
    return a->record_id < b->record_id;
  });
  return sorted;
}

const std::string &GoldPhrase(const std::unordered_map<std::string, std::string> &gold,
                              const std::string &record_id) {
  const auto it = gold.find(record_id);
  if (it == gold.end()) throw MissingRecordError("no gold phrase for record " + record_id);
  return it->second;
}

}  // namespace

std::vector<Annotation> ReadAnnotations(std::istream &in) {
  std::vector<Annotation> out;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (NormalizeWhitespace(line).empty() || line.front() == '#') continue;
    const std::vector<std::string> fields = SplitTabs(line);
    const auto where = [&] { return "annotations line " + std::to_string(line_number) + ": "; };
    if (fields.size() != 3) throw std::runtime_error(where() + "expected 3 tab-separated fields");
    if (out.empty() && fields[2] == "judgment") continue;
    Annotation a{fields[0], fields[1], std::nullopt};
    if (a.record_id.empty()) throw std::runtime_error(where() + "empty record_id");
    if (fields[2] != "ERROR") {
      size_t index;
      const char *begin = fields[2].data();
      const char *end = begin + fields[2].size();
      const auto [ptr, ec] = std::from_chars(begin, end, index);
      if (ec != std::errc() || ptr != end || begin == end) {
        throw std::runtime_error(where() + "judgment must be an index or ERROR");
      }
      a.index = index;
    }
    out.push_back(std::move(a));
  }
  return out;
}

ErrorRateSummary SummarizeErrorRates(std::span<const Annotation> annotations,
                                     std::span<const std::string> expected_records) {
  ErrorRateSummary summary;
  const auto groups = GroupByRecord(annotations);
  for (const auto &[id, group] : groups) {
    const auto errors = std::count_if(group.begin(), group.end(),
                                      [](const Annotation *a) { return !a->index; });
    if (errors == 0) {
      ++summary.no_error_count;
    } else if (static_cast<size_t>(errors) == group.size()) {
      ++summary.clear_error_count;
    } else {
      ++summary.possible_error_count;
    }
  }
  summary.records = static_cast<int64_t>(groups.size());
  const std::set<std::string> expected(expected_records.begin(), expected_records.end());
  for (const std::string &id : expected) summary.unannotated += !groups.count(id);
  if (summary.records > 0) {
    const double n = static_cast<double>(summary.records);
    summary.no_error = summary.no_error_count / n;
    summary.possible_error = summary.possible_error_count / n;
    summary.clear_error = summary.clear_error_count / n;
  }
  return summary;
}

AgreementReport AnnotatorAgreement(std::span<const Annotation> annotations,
                                   std::span<const AtomicEdit> gold) {
  std::unordered_map<std::string, const AtomicEdit *> by_id;
  for (const AtomicEdit &edit : gold) by_id.emplace(edit.id, &edit);

  const auto groups = GroupByRecord(annotations);
  std::vector<std::string> missing;
  for (const auto &[id, group] : groups) {
    if (!by_id.count(id)) missing.push_back(id);
  }
  if (!missing.empty()) {
    std::string message = "annotated records missing from gold:";
    for (const std::string &id : missing) message += " " + id;
    throw MissingRecordError(message);
  }

  AgreementReport report;
  int64_t matches = 0;
  double record_fraction_sum = 0.0;
  for (const auto &[id, group] : groups) {
    const AtomicEdit &edit = *by_id.at(id);
    if (!edit.token_aligned || !edit.token_index) {
      report.excluded_unaligned += static_cast<int64_t>(group.size());
      continue;
    }
    const size_t limit = edit.shorter().tokens.size();
    int64_t record_matches = 0;
    for (const Annotation *a : group) {
      if (a->index && *a->index > limit) {
        throw std::invalid_argument("annotation index " + std::to_string(*a->index) +
                                    " out of range for record " + id);
      }
      record_matches += a->index && *a->index == *edit.token_index;
    }
    matches += record_matches;
    report.annotations_compared += static_cast<int64_t>(group.size());
    ++report.records_compared;
    record_fraction_sum += static_cast<double>(record_matches) / group.size();
  }
  if (report.annotations_compared > 0) {
    report.per_annotation = static_cast<double>(matches) / report.annotations_compared;
    report.per_record = record_fraction_sum / report.records_compared;
  }
  return report;
}

std::vector<Proposals> ReadProposals(std::istream &in) {
  std::vector<Proposals> out;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (NormalizeWhitespace(line).empty()) continue;
    try {
      const nlohmann::json j = nlohmann::json::parse(line);
      out.push_back({j.at("record_id").get<std::string>(),
                     j.at("phrases").get<std::vector<std::string>>()});
    } catch (const nlohmann::json::exception &e) {
      throw RecordFormatError("proposals line " + std::to_string(line_number) + ": " +
                              e.what());
    }
  }
  return out;
}

double ExactMatchAtK(std::span<const Proposals> proposals,
                     const std::unordered_map<std::string, std::string> &gold, size_t k) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (proposals.empty()) return 0.0;
  int64_t hits = 0;
  for (const Proposals *p : SortedById(proposals)) {
    if (p->phrases.empty()) {
      throw std::invalid_argument("record " + p->record_id + " has no proposals");
    }
    const std::string target = NormalizeWhitespace(GoldPhrase(gold, p->record_id));
    const size_t limit = std::min(k, p->phrases.size());
    for (size_t i = 0; i < limit; ++i) {
      if (NormalizeWhitespace(p->phrases[i]) == target) {
        ++hits;
        break;
      }
    }
  }
  return static_cast<double>(hits) / static_cast<double>(proposals.size());
}

void EmbeddingTable::Add(const std::string &word, std::vector<double> vector) {
  if (vector.empty()) throw std::runtime_error("empty embedding for " + word);
  if (dimension_ == 0) dimension_ = vector.size();
  if (vector.size() != dimension_) {
    throw std::runtime_error("embedding for " + word + " has dimension " +
                             std::to_string(vector.size()) + ", expected " +
                             std::to_string(dimension_));
  }
  vectors_[word] = std::move(vector);
}

EmbeddingTable EmbeddingTable::Read(std::istream &in) {
  EmbeddingTable table;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::vector<std::string> fields = SplitSpaces(line);
    if (fields.empty()) continue;
    std::vector<double> values;
    for (size_t i = 1; i < fields.size(); ++i) {
      double v;
      const char *begin = fields[i].data();
      const char *end = begin + fields[i].size();
      const auto [ptr, ec] = std::from_chars(begin, end, v);
      if (ec != std::errc() || ptr != end) {
        throw std::runtime_error("embeddings line " + std::to_string(line_number) +
                                 ": bad value '" + fields[i] + "'");
      }
      values.push_back(v);
    }
    // word2vec-style "<count> <dimension>" header.
    if (line_number == 1 && fields.size() == 2 &&
        fields[0].find_first_not_of("0123456789") == std::string::npos) {
      continue;
    }
    table.Add(fields[0], std::move(values));
  }
  if (table.dimension_ == 0) throw std::runtime_error("embedding table is empty");
  return table;
}

EmbeddingTable EmbeddingTable::ReadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return Read(in);
}

std::vector<double> EmbeddingTable::PhraseVector(std::span<const std::string> words) const {
  std::vector<double> sum(dimension_, 0.0);
  for (const std::string &word : words) {
    const auto it = vectors_.find(word);
    if (it == vectors_.end()) continue;
    for (size_t i = 0; i < dimension_; ++i) sum[i] += it->second[i];
  }
  return sum;
}

double Cosine(std::span<const double> a, std::span<const double> b) {
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

double SimilarityAt1(std::span<const Proposals> proposals,
                     const std::unordered_map<std::string, std::string> &gold,
                     const EmbeddingTable &table, std::string_view language) {
  if (proposals.empty()) return 0.0;
  double sum = 0.0;
  for (const Proposals *p : SortedById(proposals)) {
    if (p->phrases.empty()) {
      throw std::invalid_argument("record " + p->record_id + " has no proposals");
    }
    const auto top = table.PhraseVector(Tokenize(p->phrases.front(), language).tokens);
    const auto target = table.PhraseVector(Tokenize(GoldPhrase(gold, p->record_id), language).tokens);
    sum += Cosine(top, target);
  }
  return sum / static_cast<double>(proposals.size());
}

}  // namespace atomedit

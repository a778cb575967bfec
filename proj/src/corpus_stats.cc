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

#include "atomedit/corpus_stats.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace atomedit {

namespace {

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  if (!fields.empty() && !fields.back().empty() && fields.back().back() == '\r') {
    fields.back().pop_back();
  }
  return fields;
}

// Returns true and sets *tagset when line is a "# tagset: X" header.
bool ParseTagsetHeader(const std::string &line, std::string *tagset) {
  const std::string normalized = NormalizeWhitespace(line);
  for (std::string_view prefix : {"# tagset:", "#tagset:", "# tagset =", "#tagset="}) {
    if (normalized.starts_with(prefix)) {
      *tagset = NormalizeWhitespace(std::string_view(normalized).substr(prefix.size()));
      return true;
    }
  }
  return false;
}

bool Selected(const AtomicEdit &edit, const EditSelection &selection) {
  if (selection.insertions_only && edit.kind != EditKind::kInsertion) return false;
  if (selection.single_word_only && edit.phrase_tokens.size() != 1) return false;
  return true;
}

void FinishDistribution(PosDistribution *dist) {
  for (const auto &[pos, count] : dist->counts) {
    dist->frequency[pos] = static_cast<double>(count) / static_cast<double>(dist->total);
  }
}

}  // namespace

TagSidecar ReadTagSidecar(std::istream &in) {
  TagSidecar sidecar;
  std::string line;
  size_t line_number = 0;
  // Tokens may arrive in any order; collect then sort by token index.
  std::unordered_map<std::string, std::vector<std::pair<size_t, TaggedToken>>> pending;
  while (std::getline(in, line)) {
    ++line_number;
    if (NormalizeWhitespace(line).empty()) continue;
    if (line.front() == '#') {
      ParseTagsetHeader(line, &sidecar.tagset);
      continue;
    }
    const std::vector<std::string> fields = SplitTabs(line);
    if (fields.size() < 4) {
      throw std::runtime_error("tag sidecar line " + std::to_string(line_number) +
                               ": expected 4 tab-separated fields");
    }
    if (fields[0] == "record_id") continue;  // column header
    size_t index;
    try {
      index = std::stoul(fields[1]);
    } catch (const std::exception &) {
      throw std::runtime_error("tag sidecar line " + std::to_string(line_number) +
                               ": bad token_index");
    }
    if (fields[3].empty()) {
      throw std::runtime_error("tag sidecar line " + std::to_string(line_number) +
                               ": empty pos");
    }
    pending[fields[0]].push_back({index, {fields[2], fields[3]}});
  }
  for (auto &[id, tokens] : pending) {
    std::stable_sort(tokens.begin(), tokens.end(),
                     [](const auto &a, const auto &b) { return a.first < b.first; });
    auto &out = sidecar.phrases[id];
    for (auto &[index, token] : tokens) out.push_back(std::move(token));
  }
  return sidecar;
}

BackgroundCorpus ReadBackgroundConllu(std::istream &in, bool use_xpos) {
  BackgroundCorpus corpus;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    if (line.front() == '#') {
      ParseTagsetHeader(line, &corpus.tagset);
      continue;
    }
    const std::vector<std::string> fields = SplitTabs(line);
    if (fields.size() < 5) continue;
    // Multiword ranges (1-2) and empty nodes (1.1) carry no tag.
    if (fields[0].find_first_of("-.") != std::string::npos) continue;
    const std::string &pos = use_xpos ? fields[4] : fields[3];
    if (pos.empty() || pos == "_") continue;
    corpus.tokens.push_back({fields[1], pos});
  }
  return corpus;
}

BackgroundCorpus ReadBackgroundTsv(std::istream &in) {
  BackgroundCorpus corpus;
  std::string line;
  while (std::getline(in, line)) {
    if (NormalizeWhitespace(line).empty()) continue;
    if (line.front() == '#') {
      ParseTagsetHeader(line, &corpus.tagset);
      continue;
    }
    const std::vector<std::string> fields = SplitTabs(line);
    if (fields.size() < 2 || fields[1].empty()) continue;
    corpus.tokens.push_back({fields[0], fields[1]});
  }
  return corpus;
}

PosDistribution ComputePosDistribution(std::span<const AtomicEdit> edits,
                                       const TagSidecar &tags,
                                       const EditSelection &selection) {
  PosDistribution dist;
  for (const AtomicEdit &edit : edits) {
    if (!Selected(edit, selection)) continue;
    const auto it = tags.phrases.find(edit.id);
    if (it == tags.phrases.end()) {
      ++dist.untagged;
      continue;
    }
    for (const TaggedToken &token : it->second) {
      ++dist.counts[token.pos];
      ++dist.total;
    }
  }
  FinishDistribution(&dist);
  return dist;
}

PosDistribution ComputeBackgroundDistribution(std::span<const TaggedToken> tokens) {
  PosDistribution dist;
  for (const TaggedToken &token : tokens) {
    ++dist.counts[token.pos];
    ++dist.total;
  }
  FinishDistribution(&dist);
  return dist;
}

std::vector<RateRatio> ComputeRateRatios(std::span<const AtomicEdit> edits,
                                         const TagSidecar &tags,
                                         std::span<const TaggedToken> background,
                                         const RateOptions &options) {
  std::set<std::string> known_tags;
  std::map<std::string, int64_t> inserted;
  int64_t inserted_total = 0;
  for (const AtomicEdit &edit : edits) {
    if (!Selected(edit, options.selection)) continue;
    const auto it = tags.phrases.find(edit.id);
    if (it == tags.phrases.end()) continue;
    for (const TaggedToken &token : it->second) {
      known_tags.insert(token.pos);
      if (token.pos != options.pos) continue;
      ++inserted[token.surface];
      ++inserted_total;
    }
  }
  std::unordered_map<std::string, int64_t> general;
  int64_t general_total = 0;
  for (const TaggedToken &token : background) {
    known_tags.insert(token.pos);
    if (token.pos != options.pos) continue;
    ++general[token.surface];
    ++general_total;
  }

  if (!known_tags.count(options.pos)) {
    std::ostringstream message;
    message << "unknown POS tag '" << options.pos << "'; valid tags:";
    for (const std::string &tag : known_tags) message << ' ' << tag;
    throw UnknownTagError(message.str());
  }

  std::vector<RateRatio> rows;
  if (inserted_total == 0) return rows;
  const double general_denominator = static_cast<double>(std::max<int64_t>(general_total, 1));
  for (const auto &[word, count] : inserted) {
    if (count < options.min_count) continue;
    RateRatio row;
    row.word = word;
    row.pos = options.pos;
    row.count_insertion = count;
    row.rate_insertion = 1000.0 * static_cast<double>(count) / static_cast<double>(inserted_total);
    const auto g = general.find(word);
    row.count_general = g == general.end() ? 0 : g->second;
    row.smoothed = row.count_general == 0;
    const double effective = row.smoothed ? 1.0 : static_cast<double>(row.count_general);
    row.rate_general = 1000.0 * effective / general_denominator;
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [&](const RateRatio &a, const RateRatio &b) {
    const double ra = a.ratio();
    const double rb = b.ratio();
    if (ra != rb) return options.ascending ? ra < rb : ra > rb;
    return a.word < b.word;
  });
  if (options.top_n > 0 && rows.size() > options.top_n) rows.resize(options.top_n);
  return rows;
}

LengthHistogram ComputeLengthHistogram(std::span<const AtomicEdit> edits) {
  LengthHistogram histogram;
  for (const AtomicEdit &edit : edits) {
    ++histogram.counts[edit.phrase_tokens.size()];
    ++histogram.total;
  }
  if (histogram.total == 0) return histogram;
  int64_t single = 0;
  int64_t short_phrases = 0;
  for (const auto &[length, count] : histogram.counts) {
    if (length == 1) single += count;
    if (length < 5) short_phrases += count;
  }
  histogram.fraction_single = static_cast<double>(single) / histogram.total;
  histogram.fraction_shorter_than_5 = static_cast<double>(short_phrases) / histogram.total;
  return histogram;
}

}  // namespace atomedit

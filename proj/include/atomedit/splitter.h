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

#ifndef ATOMEDIT_SPLITTER_H_
#define ATOMEDIT_SPLITTER_H_

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace atomedit {

// Deterministic rule-based sentence splitter.
//
// Line breaks are always boundaries. Within a line a boundary follows '.',
// '!' or '?' (plus any closing quotes or brackets) when the next non-space
// character, after optional opening quotes, is uppercase or an ideograph.
// A period ending a known abbreviation or a single-letter initial is not a
// boundary. The full-width marks '。', '！' and '？' end a sentence whenever
// more text follows.
class SentenceSplitter {
 public:
  // Uses the built-in abbreviation list for the language (empty for
  // languages without one).
  explicit SentenceSplitter(std::string_view language);

  // Loads the abbreviation list from a file: one entry per line including
  // its trailing period, '#' comments, and an optional "# version: <v>"
  // header. Throws std::runtime_error if the file cannot be read.
  static SentenceSplitter FromFile(const std::string &path);

  std::vector<std::string> Split(std::string_view text) const;

  bool IsAbbreviation(std::string_view word) const {
    return abbreviations_.count(std::string(word)) > 0;
  }
  const std::string &version() const { return version_; }

 private:
  SentenceSplitter() = default;

  void SplitLine(std::string_view line, std::vector<std::string> *out) const;

  std::unordered_set<std::string> abbreviations_;
  std::string version_;
};

}  // namespace atomedit

#endif  // ATOMEDIT_SPLITTER_H_

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

// The corpus record: one sentence s, a phrase p, and the edited sentence
// e(s) obtained by inserting p into s (or, for deletions, removing it).
//
// Records are exchanged as JSON lines with a fixed key order:
//
//   id, kind, language, article_id, base_revision_id, edited_revision_id,
//   base_sentence, base_tokens, edited_sentence, edited_tokens, phrase,
//   phrase_tokens, byte_span, token_index, token_aligned, bleu, provenance,
//   category (only when set)
//
// bleu is written rounded to 10 decimal places.

#ifndef ATOMEDIT_ATOMIC_EDIT_H_
#define ATOMEDIT_ATOMIC_EDIT_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "atomedit/text.h"

namespace atomedit {

enum class EditKind { kInsertion, kDeletion };

std::string_view EditKindName(EditKind kind);

inline constexpr std::string_view kWikiProvenance = "wiki";
inline constexpr std::string_view kPseudoProvenance = "pseudo";

struct AtomicEdit {
  std::string id;
  EditKind kind = EditKind::kInsertion;
  std::string language;
  std::string article_id;
  std::string base_revision_id;
  std::string edited_revision_id;
  Sentence base_sentence;
  Sentence edited_sentence;
  std::string phrase;
  std::vector<std::string> phrase_tokens;
  // Span of the phrase within the longer sentence.
  ByteSpan byte_span;
  // Token position of the phrase in the longer sentence; set iff
  // token_aligned.
  std::optional<size_t> token_index;
  bool token_aligned = false;
  double bleu = 0.0;
  std::string provenance = std::string(kWikiProvenance);
  // Externally supplied edit-type label.
  std::string category;

  // s for insertions, e(s) for deletions.
  const Sentence &shorter() const {
    return kind == EditKind::kInsertion ? base_sentence : edited_sentence;
  }
  const Sentence &longer() const {
    return kind == EditKind::kInsertion ? edited_sentence : base_sentence;
  }
};

class RecordFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ToJsonLine(const AtomicEdit &edit);

// Parses one JSON line. Throws RecordFormatError on malformed records.
AtomicEdit ParseEditJson(std::string_view line);

// Reads every non-blank line of a JSONL stream. Throws RecordFormatError
// naming the line number on the first malformed record.
std::vector<AtomicEdit> ReadEdits(std::istream &in);
std::vector<AtomicEdit> ReadEditsFile(const std::string &path);

// Re-checks the byte-level and token-level reconstruction invariants.
// Returns one message per violation; empty when the record is sound.
std::vector<std::string> CheckEditInvariants(const AtomicEdit &edit);

}  // namespace atomedit

#endif  // ATOMEDIT_ATOMIC_EDIT_H_

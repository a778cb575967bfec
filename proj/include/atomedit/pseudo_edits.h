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

// Simulated insertions made by deleting a dependency subtree from a parsed
// sentence: the shortened sentence is s, the original is e(s).

#ifndef ATOMEDIT_PSEUDO_EDITS_H_
#define ATOMEDIT_PSEUDO_EDITS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atomedit/atomic_edit.h"
#include "atomedit/conllu.h"

namespace atomedit {

inline constexpr std::string_view kInsertionMarker = "<ins>";

// Token span [start, end] (0-based, inclusive) holding exactly the root and
// its descendants.
struct SubtreeSpan {
  size_t root = 0;
  size_t start = 0;
  size_t end = 0;
  bool is_subject = false;

  bool operator==(const SubtreeSpan &) const = default;
};

// True for nsubj and its subtypes (nsubj:pass, ...).
bool IsSubjectRelation(std::string_view deprel);

// Every subtree whose tokens are contiguous, except the whole sentence,
// subject subtrees, and lone punctuation tokens. Sorted by (start, end).
std::vector<SubtreeSpan> SubtreeSpans(const ParsedSentence &sentence);

// Seed for the sentence at `ordinal` in a corpus, so each sentence draws the
// same span whatever order sentences are processed in.
uint64_t DeriveSentenceSeed(uint64_t seed, uint64_t ordinal);

// Removes one uniformly drawn eligible span. Returns nullopt when there is
// none. The record has kind insertion, provenance "pseudo", and is token
// aligned with token_index = span start. Whitespace next to the span moves
// into the phrase so that the shortened sentence keeps single separators.
std::optional<AtomicEdit> GeneratePseudoEdit(const ParsedSentence &sentence, uint64_t seed,
                                             std::string_view language);

// Builds the edit for a given span; exposed for tests.
AtomicEdit MakePseudoEdit(const ParsedSentence &sentence, const SubtreeSpan &span,
                          std::string_view language);

// Shorter-sentence tokens with kInsertionMarker at the insertion index,
// space-joined. Throws std::invalid_argument for non-aligned edits.
std::string EmitMarked(const AtomicEdit &edit);

}  // namespace atomedit

#endif  // ATOMEDIT_PSEUDO_EDITS_H_

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

#ifndef ATOMEDIT_ATOMIC_DIFF_H_
#define ATOMEDIT_ATOMIC_DIFF_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atomedit/atomic_edit.h"
#include "atomedit/text.h"

namespace atomedit {

// The edit-specific part of an AtomicEdit.
struct DiffResult {
  EditKind kind;
  std::string phrase;
  ByteSpan byte_span;  // within the longer sentence
  bool token_aligned = false;
  std::optional<size_t> token_index;
  std::vector<std::string> phrase_tokens;
};

// Decides whether t is s with one contiguous byte phrase inserted
// (Insertion) or removed (Deletion).
//
// With a the longest common prefix of the two texts and b the longest
// common suffix of what remains, the edit is atomic iff a + b equals the
// shorter length. That canonical decomposition puts the phrase at the
// rightmost of all equivalent positions. Equivalent positions further left
// (obtained by rotating the phrase while the byte before it equals its last
// byte) are then tried from right to left, and the first one whose
// boundaries coincide with token boundaries in both sentences is reported
// with its token index. Otherwise the rightmost position that falls on code
// point boundaries is reported without a token index; when none exists the
// pair is not an atomic edit.
//
// Returns nullopt when the texts are equal or the change is not a single
// contiguous insertion or deletion. language drives tokenization of
// non-aligned phrases.
std::optional<DiffResult> AtomicDiff(const Sentence &s, const Sentence &t,
                                     std::string_view language = "en");

}  // namespace atomedit

#endif  // ATOMEDIT_ATOMIC_DIFF_H_

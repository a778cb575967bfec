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

#include "atomedit/atomic_diff.h"

#include <algorithm>

namespace atomedit {

namespace {

struct TokenPlacement {
  size_t index;  // tokens of the longer sentence before the phrase
  size_t count;  // tokens inside the phrase
};

// Checks that no token of longer straddles [start, end), that the span holds
// at least one token, and that removing those tokens yields exactly the
// token list of shorter.
std::optional<TokenPlacement> PlaceTokens(const Sentence &longer,
                                          const Sentence &shorter, size_t start,
                                          size_t end) {
  size_t before = 0;
  size_t inside = 0;
  for (const ByteSpan &token : longer.byte_offsets) {
    if (token.end <= start) {
      ++before;
    } else if (token.start >= end) {
      break;
    } else if (token.start >= start && token.end <= end) {
      ++inside;
    } else {
      return std::nullopt;
    }
  }
  if (inside == 0) return std::nullopt;
  if (shorter.tokens.size() + inside != longer.tokens.size()) return std::nullopt;
  const auto &lt = longer.tokens;
  const auto &st = shorter.tokens;
  if (!std::equal(st.begin(), st.begin() + before, lt.begin())) return std::nullopt;
  if (!std::equal(st.begin() + before, st.end(), lt.begin() + before + inside)) {
    return std::nullopt;
  }
  return TokenPlacement{before, inside};
}

}  // namespace

std::optional<DiffResult> AtomicDiff(const Sentence &s, const Sentence &t,
                                     std::string_view language) {
  if (s.text.size() == t.text.size()) return std::nullopt;

  const bool insertion = t.text.size() > s.text.size();
  const Sentence &shorter = insertion ? s : t;
  const Sentence &longer = insertion ? t : s;
  const std::string_view short_text = shorter.text;
  const std::string_view long_text = longer.text;

  size_t prefix = 0;
  while (prefix < short_text.size() && short_text[prefix] == long_text[prefix]) ++prefix;
  size_t suffix = 0;
  while (suffix < short_text.size() - prefix &&
         short_text[short_text.size() - 1 - suffix] ==
             long_text[long_text.size() - 1 - suffix]) {
    ++suffix;
  }
  if (prefix + suffix != short_text.size()) return std::nullopt;

  const size_t length = long_text.size() - short_text.size();
  // Equivalent placements are prefix, prefix - 1, ..., leftmost.
  size_t leftmost = prefix;
  while (leftmost > 0 && long_text[leftmost - 1] == long_text[leftmost - 1 + length]) {
    --leftmost;
  }

  std::optional<size_t> chosen;
  std::optional<TokenPlacement> placement;
  for (size_t pos = prefix + 1; pos-- > leftmost;) {
    placement = PlaceTokens(longer, shorter, pos, pos + length);
    if (placement) {
      chosen = pos;
      break;
    }
  }
  if (!chosen) {
    for (size_t pos = prefix + 1; pos-- > leftmost;) {
      if (IsCodepointBoundary(long_text, pos) &&
          IsCodepointBoundary(long_text, pos + length)) {
        chosen = pos;
        break;
      }
    }
  }
  if (!chosen) return std::nullopt;

  DiffResult result;
  result.kind = insertion ? EditKind::kInsertion : EditKind::kDeletion;
  result.byte_span = {*chosen, *chosen + length};
  result.phrase = std::string(long_text.substr(*chosen, length));
  if (placement) {
    result.token_aligned = true;
    result.token_index = placement->index;
    result.phrase_tokens.assign(
        longer.tokens.begin() + placement->index,
        longer.tokens.begin() + placement->index + placement->count);
  } else {
    result.phrase_tokens = Tokenize(result.phrase, language).tokens;
  }
  return result;
}

}  // namespace atomedit

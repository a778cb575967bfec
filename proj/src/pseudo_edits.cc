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

#include "atomedit/pseudo_edits.h"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <tuple>

#include "atomedit/bleu.h"

namespace atomedit {

namespace {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform integer in [0, bound) by rejection, identical on every standard
// library (std::uniform_int_distribution is not).
uint64_t UniformBelow(std::mt19937_64 &rng, uint64_t bound) {
  const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                         std::numeric_limits<uint64_t>::max() % bound;
  uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

}  // namespace

bool IsSubjectRelation(std::string_view deprel) {
  return deprel.substr(0, deprel.find(':')) == "nsubj";
}

std::vector<SubtreeSpan> SubtreeSpans(const ParsedSentence &sentence) {
  const size_t n = sentence.size();
  std::vector<size_t> low(n), high(n), count(n, 1);
  for (size_t i = 0; i < n; ++i) low[i] = high[i] = i;
  // Push each token's position up through its ancestors.
  for (size_t i = 0; i < n; ++i) {
    size_t head = sentence.heads[i];
    while (head != 0) {
      const size_t h = head - 1;
      low[h] = std::min(low[h], i);
      high[h] = std::max(high[h], i);
      ++count[h];
      head = sentence.heads[h];
    }
  }
  std::vector<SubtreeSpan> spans;
  for (size_t i = 0; i < n; ++i) {
    if (high[i] - low[i] + 1 != count[i]) continue;  // not contiguous
    if (low[i] == 0 && high[i] + 1 == n) continue;   // whole sentence
    if (IsSubjectRelation(sentence.deprels[i])) continue;
    if (count[i] == 1 && sentence.upos[i] == "PUNCT") continue;
    spans.push_back({i, low[i], high[i], false});
  }
  std::sort(spans.begin(), spans.end(), [](const SubtreeSpan &a, const SubtreeSpan &b) {
    return std::tie(a.start, a.end) < std::tie(b.start, b.end);
  });
  return spans;
}

uint64_t DeriveSentenceSeed(uint64_t seed, uint64_t ordinal) {
  return SplitMix64(SplitMix64(seed) ^ ordinal);
}

AtomicEdit MakePseudoEdit(const ParsedSentence &sentence, const SubtreeSpan &span,
                          std::string_view language) {
  const size_t n = sentence.size();
  std::string text;
  std::vector<ByteSpan> offsets;
  for (size_t i = 0; i < n; ++i) {
    offsets.push_back({text.size(), text.size() + sentence.forms[i].size()});
    text += sentence.forms[i];
    if (i + 1 < n && sentence.space_after[i]) text += ' ';
  }

  const size_t a = span.start;
  const size_t b = span.end;
  const bool space_before = a > 0 && sentence.space_after[a - 1];
  const bool space_after = b + 1 < n && sentence.space_after[b];
  ByteSpan cut{offsets[a].start, offsets[b].end};
  if (a == 0 || (space_before && space_after)) {
    cut.end = offsets[b + 1].start;  // take the following separator
  } else if (b + 1 == n) {
    cut.start = offsets[a - 1].end;  // take the preceding separator
  }

  AtomicEdit edit;
  edit.id = sentence.sent_id + ":pseudo:" + std::to_string(a) + "-" + std::to_string(b);
  edit.kind = EditKind::kInsertion;
  edit.language = std::string(language);
  edit.article_id = sentence.sent_id;
  edit.provenance = std::string(kPseudoProvenance);
  edit.phrase = text.substr(cut.start, cut.size());
  edit.phrase_tokens.assign(sentence.forms.begin() + a, sentence.forms.begin() + b + 1);
  edit.byte_span = cut;
  edit.token_index = a;
  edit.token_aligned = true;

  edit.edited_sentence.text = text;
  edit.edited_sentence.tokens = sentence.forms;
  edit.edited_sentence.byte_offsets = offsets;

  Sentence &base = edit.base_sentence;
  base.text = text.substr(0, cut.start) + text.substr(cut.end);
  for (size_t i = 0; i < n; ++i) {
    if (i >= a && i <= b) continue;
    ByteSpan offset = offsets[i];
    if (i > b) {
      offset.start -= cut.size();
      offset.end -= cut.size();
    }
    base.tokens.push_back(sentence.forms[i]);
    base.byte_offsets.push_back(offset);
  }
  edit.bleu = SentenceBleu(base.tokens, edit.edited_sentence.tokens);
  return edit;
}

std::optional<AtomicEdit> GeneratePseudoEdit(const ParsedSentence &sentence, uint64_t seed,
                                             std::string_view language) {
  const std::vector<SubtreeSpan> spans = SubtreeSpans(sentence);
  if (spans.empty()) return std::nullopt;
  std::mt19937_64 rng(seed);
  return MakePseudoEdit(sentence, spans[UniformBelow(rng, spans.size())], language);
}

std::string EmitMarked(const AtomicEdit &edit) {
  if (!edit.token_aligned || !edit.token_index) {
    throw std::invalid_argument("record " + edit.id + " is not token aligned");
  }
  const auto &tokens = edit.shorter().tokens;
  if (*edit.token_index > tokens.size()) {
    throw std::invalid_argument("record " + edit.id + " has token_index out of range");
  }
  std::vector<std::string> marked(tokens.begin(), tokens.begin() + *edit.token_index);
  marked.emplace_back(kInsertionMarker);
  marked.insert(marked.end(), tokens.begin() + *edit.token_index, tokens.end());
  return JoinTokens(marked, " ");
}

}  // namespace atomedit

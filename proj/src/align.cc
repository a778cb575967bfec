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

#include "atomedit/align.h"

#include <algorithm>
#include <string>

namespace atomedit {

void AlignConfig::Validate() const {
  if (window_k < 0) throw std::invalid_argument("window_k must be >= 0");
  if (bleu_max_order < 1) throw std::invalid_argument("bleu_max_order must be >= 1");
  if (!(min_bleu >= 0.0 && min_bleu <= 1.0)) {
    throw std::invalid_argument("min_bleu must be in [0, 1]");
  }
}

namespace {

std::vector<AlignedPair> Align(std::span<const Sentence> base,
                               std::span<const Sentence> edited, size_t window,
                               const AlignConfig &config) {
  std::vector<AlignedPair> pairs;
  if (base.empty() || edited.empty()) return pairs;

  const int order = config.bleu_max_order;
  TokenInterner interner;
  std::vector<BleuProfile> base_profiles;
  std::vector<BleuProfile> edited_profiles;
  base_profiles.reserve(base.size());
  edited_profiles.reserve(edited.size());
  for (const Sentence &s : base) {
    base_profiles.push_back(MakeBleuProfile(s.tokens, order, &interner));
  }
  for (const Sentence &s : edited) {
    edited_profiles.push_back(MakeBleuProfile(s.tokens, order, &interner));
  }

  const size_t m = edited.size();
  for (size_t i = 0; i < base.size(); ++i) {
    // An identical sentence at the same index scores 1 at displacement 0 and
    // therefore wins; nothing is emitted for it.
    if (i < m && base[i].text == edited[i].text) continue;

    bool found = false;
    AlignedPair best{i, 0, -1.0};
    // Visit j by increasing displacement, smaller j first, so that a strict
    // improvement test implements the tie-break.
    for (size_t d = 0; d <= window; ++d) {
      const bool left_ok = i >= d;
      const bool right_ok = d > 0 && i + d < m;
      if (!left_ok && i + d >= m) break;
      for (int side = 0; side < 2; ++side) {
        size_t j;
        if (side == 0) {
          if (!left_ok || i - d >= m) continue;
          j = i - d;
        } else {
          if (!right_ok) continue;
          j = i + d;
        }
        const double score = SentenceBleu(base_profiles[i], edited_profiles[j], order);
        if (!found || score > best.bleu) {
          best = {i, j, score};
          found = true;
        }
      }
    }
    if (!found || best.bleu < config.min_bleu) continue;
    if (base[i].text == edited[best.edited_index].text) continue;
    pairs.push_back(best);
  }
  return pairs;
}

}  // namespace

std::vector<AlignedPair> AlignWindowed(std::span<const Sentence> base,
                                       std::span<const Sentence> edited,
                                       const AlignConfig &config) {
  config.Validate();
  return Align(base, edited, static_cast<size_t>(config.window_k), config);
}

std::vector<AlignedPair> AlignFull(std::span<const Sentence> base,
                                   std::span<const Sentence> edited,
                                   const AlignConfig &config) {
  config.Validate();
  if (!base.empty() && edited.size() > kMaxFullAlignCells / base.size()) {
    throw AlignOversizeError("full alignment of " + std::to_string(base.size()) + " x " +
                             std::to_string(edited.size()) + " sentences exceeds " +
                             std::to_string(kMaxFullAlignCells) + " cells");
  }
  const size_t window = std::max(base.size(), edited.size());
  return Align(base, edited, window, config);
}

}  // namespace atomedit

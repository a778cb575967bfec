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

#ifndef ATOMEDIT_ALIGN_H_
#define ATOMEDIT_ALIGN_H_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "atomedit/bleu.h"
#include "atomedit/text.h"

namespace atomedit {

struct AlignConfig {
  int window_k = 5;
  int bleu_max_order = kDefaultBleuOrder;
  double min_bleu = 0.1;

  // Throws std::invalid_argument when a field is out of range.
  void Validate() const;
};

// Base sentence i matched to edited sentence j.
struct AlignedPair {
  size_t base_index;
  size_t edited_index;
  double bleu;

  bool operator==(const AlignedPair &other) const = default;
};

// Largest n * m accepted by AlignFull.
inline constexpr size_t kMaxFullAlignCells = 1000000;

class AlignOversizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// For every base sentence i, scores BLEU(base_i, edited_j) for
// j in [i - k, i + k] and keeps the best j; ties go to the smaller |j - i|,
// then the smaller j. The pair is emitted when its BLEU reaches min_bleu and
// the two texts differ. Output is ordered by base index.
std::vector<AlignedPair> AlignWindowed(std::span<const Sentence> base,
                                       std::span<const Sentence> edited,
                                       const AlignConfig &config);

// Same contract with j unrestricted. Quadratic; throws AlignOversizeError
// when base.size() * edited.size() exceeds kMaxFullAlignCells.
std::vector<AlignedPair> AlignFull(std::span<const Sentence> base,
                                   std::span<const Sentence> edited,
                                   const AlignConfig &config);

}  // namespace atomedit

#endif  // ATOMEDIT_ALIGN_H_

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

// Single-reference sentence-level BLEU.
//
// The score is the geometric mean of the modified n-gram precisions for
// n = 1..max_order times the brevity penalty exp(1 - |ref| / |cand|) when the
// candidate is shorter than the reference. Precisions for n >= 2 are smoothed
// by adding one to both the clipped match count and the candidate n-gram
// count; the unigram precision is exact, so a candidate sharing no token with
// the reference scores 0. An empty candidate or reference scores 0.

#ifndef ATOMEDIT_BLEU_H_
#define ATOMEDIT_BLEU_H_

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace atomedit {

inline constexpr int kDefaultBleuOrder = 4;

// Maps token strings to dense ids so n-grams compare as integer sequences.
class TokenInterner {
 public:
  uint32_t Intern(const std::string &token);

 private:
  std::unordered_map<std::string, uint32_t> ids_;
};

// Sorted n-gram counts of one sentence, for repeated scoring.
struct BleuProfile {
  size_t length = 0;
  // ngrams[n - 1] holds (n-gram, count) sorted by n-gram.
  std::vector<std::vector<std::pair<std::u32string, int>>> ngrams;
};

BleuProfile MakeBleuProfile(std::span<const std::string> tokens, int max_order,
                            TokenInterner *interner);

// Profiles must come from the same interner and have at least max_order
// levels.
double SentenceBleu(const BleuProfile &candidate, const BleuProfile &reference,
                    int max_order);

double SentenceBleu(std::span<const std::string> candidate,
                    std::span<const std::string> reference,
                    int max_order = kDefaultBleuOrder);

}  // namespace atomedit

#endif  // ATOMEDIT_BLEU_H_

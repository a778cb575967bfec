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

#include "atomedit/bleu.h"

#include <algorithm>
#include <cmath>

namespace atomedit {

uint32_t TokenInterner::Intern(const std::string &token) {
  const auto [it, inserted] = ids_.try_emplace(token, static_cast<uint32_t>(ids_.size()));
  return it->second;
}

BleuProfile MakeBleuProfile(std::span<const std::string> tokens, int max_order,
                            TokenInterner *interner) {
  BleuProfile profile;
  profile.length = tokens.size();
  std::u32string ids;
  ids.reserve(tokens.size());
  for (const std::string &token : tokens) ids.push_back(interner->Intern(token));

  profile.ngrams.resize(max_order);
  for (int n = 1; n <= max_order; ++n) {
    if (ids.size() < static_cast<size_t>(n)) continue;
    std::vector<std::u32string> grams;
    grams.reserve(ids.size() - n + 1);
    for (size_t i = 0; i + n <= ids.size(); ++i) grams.push_back(ids.substr(i, n));
    std::sort(grams.begin(), grams.end());
    auto &level = profile.ngrams[n - 1];
    for (auto &gram : grams) {
      if (!level.empty() && level.back().first == gram) {
        ++level.back().second;
      } else {
        level.emplace_back(std::move(gram), 1);
      }
    }
  }
  return profile;
}

double SentenceBleu(const BleuProfile &candidate, const BleuProfile &reference,
                    int max_order) {
  if (candidate.length == 0 || reference.length == 0) return 0.0;

  double log_precision_sum = 0.0;
  for (int n = 1; n <= max_order; ++n) {
    const auto &cand = candidate.ngrams[n - 1];
    const auto &ref = reference.ngrams[n - 1];
    int64_t matches = 0;
    int64_t total = 0;
    auto r = ref.begin();
    for (const auto &[gram, count] : cand) {
      total += count;
      while (r != ref.end() && r->first < gram) ++r;
      if (r != ref.end() && r->first == gram) matches += std::min(count, r->second);
    }
    if (n == 1) {
      if (matches == 0) return 0.0;
      log_precision_sum += std::log(static_cast<double>(matches) / total);
    } else {
      log_precision_sum +=
          std::log(static_cast<double>(matches + 1) / static_cast<double>(total + 1));
    }
  }

  double log_bleu = log_precision_sum / max_order;
  if (candidate.length < reference.length) {
    log_bleu += 1.0 - static_cast<double>(reference.length) / candidate.length;
  }
  return std::exp(log_bleu);
}

double SentenceBleu(std::span<const std::string> candidate,
                    std::span<const std::string> reference, int max_order) {
  TokenInterner interner;
  const BleuProfile cand = MakeBleuProfile(candidate, max_order, &interner);
  const BleuProfile ref = MakeBleuProfile(reference, max_order, &interner);
  return SentenceBleu(cand, ref, max_order);
}

}  // namespace atomedit

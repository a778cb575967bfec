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

// Interpolated Kneser-Ney n-gram language model.
//
// For a level-l distribution with context h (l - 1 tokens):
//
//   P_l(w | h) = max(c(hw) - D_l, 0) / c(h.)
//              + D_l * N1+(h.) / c(h.) * P_{l-1}(w | h')
//
// where h' drops the oldest token of h. The highest level uses raw counts;
// lower levels use continuation counts N1+(.hw), the number of distinct
// tokens seen immediately before hw. A context never seen at some level backs
// off entirely to the level below. P_0 is uniform over the predictable
// vocabulary (every token except BOS, including UNK and EOS), so every
// probability is strictly positive.
//
// Each sentence is padded with order - 1 BOS tokens and one EOS token, which
// is scored. Training tokens seen fewer than unk_threshold times become UNK;
// unknown tokens at query time are scored as UNK.

#ifndef ATOMEDIT_NGRAM_MODEL_H_
#define ATOMEDIT_NGRAM_MODEL_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace atomedit {

// Anything that assigns a natural-log probability to a token sequence.
class SentenceScorer {
 public:
  virtual ~SentenceScorer() = default;

  // Log probability of tokens followed by end of sentence.
  virtual double LogProb(std::span<const std::string> tokens) const = 0;

  // exp(-LogProb / (len + 1)).
  double Perplexity(std::span<const std::string> tokens) const;
};

// Assigns probability 1 / vocab_size to every token, so every sentence of a
// given length gets the same score. A control for the locator.
class UniformScorer : public SentenceScorer {
 public:
  explicit UniformScorer(size_t vocab_size);
  double LogProb(std::span<const std::string> tokens) const override;

 private:
  double log_vocab_;
};

struct NGramTrainOptions {
  int order = 3;
  // Absolute discount shared by all levels; a value <= 0 estimates one per
  // level from count-of-counts, n1 / (n1 + 2 n2).
  double discount = 0.75;
  int unk_threshold = 2;
};

class NGramModel : public SentenceScorer {
 public:
  static constexpr std::string_view kBos = "<s>";
  static constexpr std::string_view kEos = "</s>";
  static constexpr std::string_view kUnk = "<unk>";
  static constexpr uint32_t kUnkId = 0;
  static constexpr uint32_t kBosId = 1;
  static constexpr uint32_t kEosId = 2;
  static constexpr uint32_t kFileVersion = 1;

  // Throws std::invalid_argument on an empty corpus, order < 1, or a
  // discount >= 1.
  static NGramModel Train(std::span<const std::vector<std::string>> corpus,
                          const NGramTrainOptions &options);

  int order() const { return order_; }
  int unk_threshold() const { return unk_threshold_; }
  const std::vector<double> &discounts() const { return discounts_; }
  // Index = token id; ids 0..2 are UNK, BOS, EOS.
  const std::vector<std::string> &vocabulary() const { return id_to_token_; }
  // Tokens that can be predicted: the vocabulary minus BOS.
  size_t predictable_size() const { return id_to_token_.size() - 1; }

  uint32_t TokenId(std::string_view token) const;

  // P(word | context) for ids; context holds the most recent tokens last and
  // may be shorter or longer than order - 1.
  double Prob(uint32_t word, std::span<const uint32_t> context) const;

  double LogProb(std::span<const std::string> tokens) const override;

  // Every context (order - 1 ids, BOS padded) observed in training.
  std::vector<std::vector<uint32_t>> ObservedContexts() const;

  // Versioned little-endian binary format.
  void Save(std::ostream &out) const;
  static NGramModel Load(std::istream &in);
  void SaveFile(const std::string &path) const;
  static NGramModel LoadFile(const std::string &path);

  // ARPA text with log10 probabilities and back-off weights.
  void WriteArpa(std::ostream &out) const;

 private:
  using Key = std::u32string;

  struct ContextStats {
    double total = 0.0;  // sum of counts over following words
    int64_t types = 0;   // distinct following words
  };

  struct Level {
    std::unordered_map<Key, double> counts;          // full n-gram -> count
    std::unordered_map<Key, ContextStats> contexts;  // context -> stats
  };

  NGramModel() = default;

  void BuildVocabulary(std::span<const std::vector<std::string>> corpus);
  void DeriveContexts();
  // levels_[l - 1] is level l.
  double LevelProb(int level, uint32_t word, std::u32string_view context) const;

  int order_ = 0;
  int unk_threshold_ = 0;
  std::vector<double> discounts_;
  std::vector<std::string> id_to_token_;
  std::unordered_map<std::string, uint32_t> token_to_id_;
  std::vector<Level> levels_;
};

class ModelFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace atomedit

#endif  // ATOMEDIT_NGRAM_MODEL_H_

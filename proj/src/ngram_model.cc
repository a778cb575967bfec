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

#include "atomedit/ngram_model.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

namespace atomedit {

namespace {

constexpr char kMagic[8] = {'A', 'T', 'O', 'M', 'E', 'D', 'L', 'M'};

// Fixed-width little-endian writers and readers; the layout does not depend
// on host byte order.
void PutU32(std::ostream &out, uint32_t v) {
  char bytes[4];
  for (int i = 0; i < 4; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(bytes, 4);
}

void PutU64(std::ostream &out, uint64_t v) {
  char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(bytes, 8);
}

void PutF64(std::ostream &out, double v) { PutU64(out, std::bit_cast<uint64_t>(v)); }

void ReadExactly(std::istream &in, char *dst, size_t n) {
  in.read(dst, static_cast<std::streamsize>(n));
  if (static_cast<size_t>(in.gcount()) != n) throw ModelFormatError("truncated model file");
}

uint32_t GetU32(std::istream &in) {
  unsigned char bytes[4];
  ReadExactly(in, reinterpret_cast<char *>(bytes), 4);
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(bytes[i]) << (8 * i);
  return v;
}

uint64_t GetU64(std::istream &in) {
  unsigned char bytes[8];
  ReadExactly(in, reinterpret_cast<char *>(bytes), 8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(bytes[i]) << (8 * i);
  return v;
}

double GetF64(std::istream &in) { return std::bit_cast<double>(GetU64(in)); }

// Ney's estimate from count-of-counts, kept strictly inside (0, 1) so that
// every context reserves some back-off mass.
double EstimateDiscount(const std::unordered_map<std::u32string, double> &counts) {
  int64_t n1 = 0;
  int64_t n2 = 0;
  for (const auto &[key, count] : counts) {
    if (count == 1.0) ++n1;
    if (count == 2.0) ++n2;
  }
  if (n1 + 2 * n2 == 0) return 0.75;
  const double d = static_cast<double>(n1) / static_cast<double>(n1 + 2 * n2);
  return std::clamp(d, 0.05, 0.95);
}

std::string FormatLog10(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

}  // namespace

double SentenceScorer::Perplexity(std::span<const std::string> tokens) const {
  return std::exp(-LogProb(tokens) / static_cast<double>(tokens.size() + 1));
}

UniformScorer::UniformScorer(size_t vocab_size)
    : log_vocab_(std::log(static_cast<double>(std::max<size_t>(vocab_size, 1)))) {}

double UniformScorer::LogProb(std::span<const std::string> tokens) const {
  return -static_cast<double>(tokens.size() + 1) * log_vocab_;
}

NGramModel NGramModel::Train(std::span<const std::vector<std::string>> corpus,
                             const NGramTrainOptions &options) {
  if (options.order < 1) throw std::invalid_argument("order must be at least 1");
  if (options.discount >= 1.0) throw std::invalid_argument("discount must be below 1");
  size_t token_count = 0;
  for (const auto &sentence : corpus) token_count += sentence.size();
  if (corpus.empty() || token_count == 0) {
    throw std::invalid_argument("cannot train a language model on an empty corpus");
  }

  NGramModel model;
  model.order_ = options.order;
  model.unk_threshold_ = options.unk_threshold;
  model.BuildVocabulary(corpus);
  model.levels_.resize(options.order);

  const size_t n = static_cast<size_t>(options.order);
  Level &top = model.levels_[n - 1];
  std::u32string padded;
  for (const auto &sentence : corpus) {
    padded.assign(n - 1, kBosId);
    for (const std::string &token : sentence) padded.push_back(model.TokenId(token));
    padded.push_back(kEosId);
    for (size_t t = n - 1; t < padded.size(); ++t) {
      top.counts[padded.substr(t + 1 - n, n)] += 1.0;
    }
  }
  // Continuation counts: each distinct (l + 1)-gram x h w adds one to h w.
  for (size_t level = n - 1; level >= 1; --level) {
    Level &lower = model.levels_[level - 1];
    for (const auto &[key, count] : model.levels_[level].counts) {
      lower.counts[key.substr(1)] += 1.0;
    }
  }

  model.discounts_.resize(n);
  for (size_t level = 0; level < n; ++level) {
    model.discounts_[level] = options.discount > 0.0
                                  ? options.discount
                                  : EstimateDiscount(model.levels_[level].counts);
  }
  model.DeriveContexts();
  return model;
}

void NGramModel::BuildVocabulary(std::span<const std::vector<std::string>> corpus) {
  std::map<std::string, int64_t> frequency;
  for (const auto &sentence : corpus) {
    for (const std::string &token : sentence) ++frequency[token];
  }
  id_to_token_ = {std::string(kUnk), std::string(kBos), std::string(kEos)};
  token_to_id_.clear();
  for (uint32_t id = 0; id < id_to_token_.size(); ++id) token_to_id_[id_to_token_[id]] = id;
  // std::map iteration gives ids in byte order, independent of corpus order.
  for (const auto &[token, count] : frequency) {
    if (count < unk_threshold_ || token_to_id_.count(token)) continue;
    token_to_id_[token] = static_cast<uint32_t>(id_to_token_.size());
    id_to_token_.push_back(token);
  }
}

void NGramModel::DeriveContexts() {
  for (Level &level : levels_) {
    level.contexts.clear();
    for (const auto &[key, count] : level.counts) {
      ContextStats &stats = level.contexts[key.substr(0, key.size() - 1)];
      stats.total += count;
      ++stats.types;
    }
  }
}

uint32_t NGramModel::TokenId(std::string_view token) const {
  // BOS and EOS are positional; a literal "<s>" in text is just unknown.
  const auto it = token_to_id_.find(std::string(token));
  if (it == token_to_id_.end() || it->second == kBosId || it->second == kEosId) return kUnkId;
  return it->second;
}

double NGramModel::LevelProb(int level, uint32_t word, std::u32string_view context) const {
  if (level == 0) return 1.0 / static_cast<double>(predictable_size());
  const double lower =
      LevelProb(level - 1, word, context.empty() ? context : context.substr(1));
  const Level &stats = levels_[level - 1];
  const auto ctx = stats.contexts.find(Key(context));
  if (ctx == stats.contexts.end()) return lower;
  Key gram(context);
  gram.push_back(word);
  const auto found = stats.counts.find(gram);
  const double count = found == stats.counts.end() ? 0.0 : found->second;
  const double d = discounts_[level - 1];
  const double total = ctx->second.total;
  return std::max(count - d, 0.0) / total +
         d * static_cast<double>(ctx->second.types) / total * lower;
}

double NGramModel::Prob(uint32_t word, std::span<const uint32_t> context) const {
  const size_t width = static_cast<size_t>(order_ - 1);
  Key key(width, kBosId);
  const size_t take = std::min(width, context.size());
  std::copy(context.end() - static_cast<std::ptrdiff_t>(take), context.end(),
            key.end() - static_cast<std::ptrdiff_t>(take));
  return LevelProb(order_, word, key);
}

double NGramModel::LogProb(std::span<const std::string> tokens) const {
  const size_t width = static_cast<size_t>(order_ - 1);
  Key padded(width, kBosId);
  for (const std::string &token : tokens) padded.push_back(TokenId(token));
  padded.push_back(kEosId);
  double total = 0.0;
  const std::u32string_view view(padded);
  for (size_t t = width; t < padded.size(); ++t) {
    total += std::log(LevelProb(order_, padded[t], view.substr(t - width, width)));
  }
  return total;
}

std::vector<std::vector<uint32_t>> NGramModel::ObservedContexts() const {
  std::vector<std::vector<uint32_t>> out;
  for (const auto &[context, stats] : levels_.back().contexts) {
    out.emplace_back(context.begin(), context.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void NGramModel::Save(std::ostream &out) const {
  out.write(kMagic, sizeof(kMagic));
  PutU32(out, kFileVersion);
  PutU32(out, static_cast<uint32_t>(order_));
  PutU32(out, static_cast<uint32_t>(unk_threshold_));
  for (double d : discounts_) PutF64(out, d);
  PutU32(out, static_cast<uint32_t>(id_to_token_.size()));
  for (const std::string &token : id_to_token_) {
    PutU32(out, static_cast<uint32_t>(token.size()));
    out.write(token.data(), static_cast<std::streamsize>(token.size()));
  }
  for (const Level &level : levels_) {
    std::vector<std::pair<Key, double>> entries(level.counts.begin(), level.counts.end());
    std::sort(entries.begin(), entries.end());
    PutU64(out, entries.size());
    for (const auto &[key, count] : entries) {
      for (char32_t id : key) PutU32(out, static_cast<uint32_t>(id));
      PutF64(out, count);
    }
  }
  if (!out) throw std::runtime_error("failed writing model");
}

NGramModel NGramModel::Load(std::istream &in) {
  char magic[sizeof(kMagic)];
  ReadExactly(in, magic, sizeof(magic));
  if (!std::equal(magic, magic + sizeof(magic), kMagic)) {
    throw ModelFormatError("not an atomedit language model file");
  }
  const uint32_t version = GetU32(in);
  if (version != kFileVersion) {
    throw ModelFormatError("unsupported model file version " + std::to_string(version));
  }
  NGramModel model;
  model.order_ = static_cast<int>(GetU32(in));
  model.unk_threshold_ = static_cast<int>(GetU32(in));
  if (model.order_ < 1 || model.order_ > 64) throw ModelFormatError("bad model order");
  for (int i = 0; i < model.order_; ++i) {
    const double d = GetF64(in);
    if (!(d > 0.0 && d < 1.0)) throw ModelFormatError("bad discount");
    model.discounts_.push_back(d);
  }
  const uint32_t vocab_size = GetU32(in);
  if (vocab_size < 3) throw ModelFormatError("vocabulary lacks reserved tokens");
  for (uint32_t id = 0; id < vocab_size; ++id) {
    const uint32_t length = GetU32(in);
    std::string token(length, '\0');
    ReadExactly(in, token.data(), length);
    if (!model.token_to_id_.emplace(token, id).second) {
      throw ModelFormatError("duplicate vocabulary entry");
    }
    model.id_to_token_.push_back(std::move(token));
  }
  if (model.id_to_token_[kUnkId] != kUnk || model.id_to_token_[kBosId] != kBos ||
      model.id_to_token_[kEosId] != kEos) {
    throw ModelFormatError("reserved tokens out of place");
  }
  model.levels_.resize(model.order_);
  for (int level = 1; level <= model.order_; ++level) {
    const uint64_t entries = GetU64(in);
    Level &out = model.levels_[level - 1];
    for (uint64_t e = 0; e < entries; ++e) {
      Key key;
      for (int i = 0; i < level; ++i) {
        const uint32_t id = GetU32(in);
        if (id >= vocab_size) throw ModelFormatError("token id out of range");
        key.push_back(id);
      }
      const double count = GetF64(in);
      if (!(count > 0.0)) throw ModelFormatError("non-positive count");
      out.counts.emplace(std::move(key), count);
    }
  }
  model.DeriveContexts();
  return model;
}

void NGramModel::SaveFile(const std::string &path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  Save(out);
}

NGramModel NGramModel::LoadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  return Load(in);
}

void NGramModel::WriteArpa(std::ostream &out) const {
  // Level l lists its counted n-grams plus every context used at level
  // l + 1, so that each back-off weight has an entry to live on. Listed
  // probabilities are the exact interpolated values, so standard ARPA
  // back-off reproduces Prob.
  std::vector<std::set<Key>> entries(order_);
  for (uint32_t id = 0; id < id_to_token_.size(); ++id) entries[0].insert(Key(1, id));
  for (int level = 1; level <= order_; ++level) {
    for (const auto &[key, count] : levels_[level - 1].counts) entries[level - 1].insert(key);
    if (level < order_) {
      for (const auto &[context, stats] : levels_[level].contexts) {
        entries[level - 1].insert(context);
      }
    }
  }

  out << "\n\\data\\\n";
  for (int level = 1; level <= order_; ++level) {
    out << "ngram " << level << "=" << entries[level - 1].size() << "\n";
  }
  for (int level = 1; level <= order_; ++level) {
    out << "\n\\" << level << "-grams:\n";
    for (const Key &gram : entries[level - 1]) {
      const uint32_t word = gram.back();
      const std::u32string_view context = std::u32string_view(gram).substr(0, gram.size() - 1);
      const double log10p =
          word == kBosId ? -99.0 : std::log10(LevelProb(level, word, context));
      out << FormatLog10(log10p);
      for (size_t i = 0; i < gram.size(); ++i) {
        out << (i == 0 ? "\t" : " ") << id_to_token_[gram[i]];
      }
      if (level < order_) {
        const auto ctx = levels_[level].contexts.find(gram);
        if (ctx != levels_[level].contexts.end()) {
          const double gamma = discounts_[level] * static_cast<double>(ctx->second.types) /
                               ctx->second.total;
          out << "\t" << FormatLog10(std::log10(gamma));
        }
      }
      out << "\n";
    }
  }
  out << "\n\\end\\\n";
}

}  // namespace atomedit

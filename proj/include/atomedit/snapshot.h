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

#ifndef ATOMEDIT_SNAPSHOT_H_
#define ATOMEDIT_SNAPSHOT_H_

#include <span>
#include <string>
#include <vector>

#include "atomedit/dump_reader.h"
#include "atomedit/splitter.h"
#include "atomedit/text.h"

namespace atomedit {

// One plain-text version of an article, split into sentences in document
// order. No sentence is empty.
struct Snapshot {
  std::string article_id;
  std::string revision_id;
  std::vector<Sentence> sentences;
};

// Markup stripping, sentence splitting and tokenization for one language.
// Immutable after construction and safe to share between threads.
class TextPipeline {
 public:
  explicit TextPipeline(const IngestConfig &config);

  Snapshot Build(const RawSnapshot &raw) const;

  std::vector<std::string> SplitSentences(std::string_view text) const {
    return splitter_.Split(text);
  }
  const std::string &language() const { return language_; }
  const SentenceSplitter &splitter() const { return splitter_; }

 private:
  std::string language_;
  SentenceSplitter splitter_;
};

// Removes revisions whose body is identical to the preceding retained one.
void DropUnchangedRevisions(std::vector<RawSnapshot> *revisions);

struct SnapshotPair {
  const Snapshot *base;
  const Snapshot *edited;
};

// Consecutive pairs (s[i], s[i+1]); max(0, n - 1) of them.
std::vector<SnapshotPair> PairSnapshots(std::span<const Snapshot> snapshots);

}  // namespace atomedit

#endif  // ATOMEDIT_SNAPSHOT_H_

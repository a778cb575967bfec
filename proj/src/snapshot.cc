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

#include "atomedit/snapshot.h"

#include "atomedit/markup.h"

namespace atomedit {

namespace {

SentenceSplitter MakeSplitter(const IngestConfig &config) {
  if (!config.abbrev_list_path.empty()) {
    return SentenceSplitter::FromFile(config.abbrev_list_path);
  }
  return SentenceSplitter(config.language);
}

}  // namespace

TextPipeline::TextPipeline(const IngestConfig &config)
    : language_(config.language), splitter_(MakeSplitter(config)) {}

Snapshot TextPipeline::Build(const RawSnapshot &raw) const {
  Snapshot snapshot;
  snapshot.article_id = raw.article_id;
  snapshot.revision_id = raw.revision_id;
  for (const std::string &text : splitter_.Split(StripMarkup(raw.body))) {
    Sentence sentence = Tokenize(text, language_);
    if (!sentence.tokens.empty()) snapshot.sentences.push_back(std::move(sentence));
  }
  return snapshot;
}

void DropUnchangedRevisions(std::vector<RawSnapshot> *revisions) {
  std::vector<RawSnapshot> kept;
  kept.reserve(revisions->size());
  for (RawSnapshot &revision : *revisions) {
    if (!kept.empty() && kept.back().body == revision.body) continue;
    kept.push_back(std::move(revision));
  }
  *revisions = std::move(kept);
}

std::vector<SnapshotPair> PairSnapshots(std::span<const Snapshot> snapshots) {
  std::vector<SnapshotPair> pairs;
  for (size_t i = 1; i < snapshots.size(); ++i) {
    pairs.push_back({&snapshots[i - 1], &snapshots[i]});
  }
  return pairs;
}

}  // namespace atomedit

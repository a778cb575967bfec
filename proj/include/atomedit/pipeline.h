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

// End-to-end corpus construction: read revision histories, mine atomic
// edits from consecutive snapshots, and write them as JSONL shards with a
// summary report.

#ifndef ATOMEDIT_PIPELINE_H_
#define ATOMEDIT_PIPELINE_H_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "atomedit/align.h"
#include "atomedit/atomic_edit.h"
#include "atomedit/config_file.h"
#include "atomedit/dump_reader.h"

namespace atomedit {

struct PipelineConfig {
  std::string language = "en";
  std::string input;  // dump file, directory, or "-" for stdin
  InputFormat format = InputFormat::kAuto;
  std::string abbreviations;  // optional abbreviation list file
  AlignConfig align;
  std::string output_dir;
  size_t shard_size = 100000;  // records per shard
  size_t max_snapshots = kDefaultMaxSnapshots;
  uint64_t seed = 0;
  size_t jobs = 0;  // 0 = hardware concurrency
  // Also write the sentences of each article's latest snapshot to
  // sentences.txt, one per line with a blank line after each article
  // (language model training text).
  bool dump_sentences = false;

  // Throws ConfigError for out-of-range values.
  void Validate() const;
};

// Applies configuration keys onto *config. Accepted keys: language, input,
// format (auto|xml|directory), abbreviations, output_dir, shard_size,
// max_snapshots, seed, jobs, dump_sentences, align.window_k,
// align.min_bleu, align.bleu_max_order. Throws ConfigError on any other key.
void ApplyConfig(const std::map<std::string, ConfigValue> &values, PipelineConfig *config);

InputFormat ParseInputFormat(const std::string &name);

struct ExtractSummary {
  int64_t articles = 0;
  int64_t articles_failed = 0;
  int64_t revisions = 0;
  int64_t snapshot_pairs = 0;
  int64_t insertions = 0;
  int64_t deletions = 0;
  int64_t token_aligned = 0;
  std::vector<std::string> shards;  // file names relative to output_dir
  std::vector<std::string> errors;  // "article: message"

  int64_t total() const { return insertions + deletions; }
  std::string ToJson() const;
};

// Called once per finished article, in input order.
using ProgressCallback = std::function<void(const ExtractSummary &)>;

// Mines every article and writes shards edits-NNNNN.jsonl plus
// summary.json to config.output_dir (created if needed). Each file is
// written under a temporary name and renamed into place, so an interrupted
// run never leaves a truncated file under a final name. Output does not
// depend on config.jobs. Per-article errors are recorded and skipped;
// unreadable input or unwritable output throws std::runtime_error.
ExtractSummary RunExtract(const PipelineConfig &config, const ProgressCallback &progress = {});

// Mines the edits of one article without touching the file system.
std::vector<AtomicEdit> ExtractArticle(const ArticleRevisions &article,
                                       const PipelineConfig &config,
                                       std::vector<std::string> *latest_sentences = nullptr);

// Writes content to path via a temporary sibling and rename.
void WriteFileAtomically(const std::string &path, const std::string &content);

struct ValidationReport {
  int64_t records = 0;
  int64_t shards = 0;
  // "file:line id: message" for each violation or unreadable record.
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Re-checks every record of the given shard files (or every *.jsonl in a
// directory) byte-exactly.
ValidationReport ValidateCorpus(const std::vector<std::string> &paths);

// Shard files under a path: the path itself if it is a file, else the sorted
// *.jsonl files inside it.
std::vector<std::string> ListShards(const std::string &path);

}  // namespace atomedit

#endif  // ATOMEDIT_PIPELINE_H_

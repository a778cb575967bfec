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

#include "atomedit/pipeline.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <thread>
#include <unistd.h>

#include "atomedit/extract.h"
#include "atomedit/snapshot.h"
#include "json.hpp"

namespace atomedit {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

IngestConfig MakeIngestConfig(const PipelineConfig &config) {
  IngestConfig ingest;
  ingest.language = config.language;
  ingest.max_snapshots = config.max_snapshots;
  ingest.abbrev_list_path = config.abbreviations;
  ingest.format = config.format;
  return ingest;
}

struct ArticleResult {
  std::vector<AtomicEdit> edits;
  std::vector<std::string> latest_sentences;
  int64_t revisions = 0;
  int64_t pairs = 0;
  std::string error;
};

ArticleResult ProcessArticle(const ArticleRevisions &article, const PipelineConfig &config,
                             const TextPipeline &text) {
  ArticleResult result;
  if (!article.ok()) {
    result.error = article.error;
    return result;
  }
  try {
    std::vector<RawSnapshot> revisions = article.revisions;
    result.revisions = static_cast<int64_t>(revisions.size());
    DropUnchangedRevisions(&revisions);
    std::vector<Snapshot> snapshots;
    snapshots.reserve(revisions.size());
    for (const RawSnapshot &raw : revisions) snapshots.push_back(text.Build(raw));
    for (const SnapshotPair &pair : PairSnapshots(snapshots)) {
      ++result.pairs;
      std::vector<AtomicEdit> edits =
          ExtractEdits(*pair.base, *pair.edited, config.align, config.language);
      std::move(edits.begin(), edits.end(), std::back_inserter(result.edits));
    }
    if (!snapshots.empty()) {
      for (const Sentence &s : snapshots.back().sentences) {
        result.latest_sentences.push_back(s.text);
      }
    }
  } catch (const std::exception &e) {
    result.edits.clear();
    result.error = e.what();
  }
  return result;
}

std::string ShardName(size_t index) {
  char name[32];
  std::snprintf(name, sizeof(name), "edits-%05zu.jsonl", index);
  return name;
}

}  // namespace

void PipelineConfig::Validate() const {
  try {
    align.Validate();
  } catch (const std::invalid_argument &e) {
    throw ConfigError(e.what());
  }
  if (language.empty()) throw ConfigError("language must not be empty");
  if (shard_size < 1) throw ConfigError("shard_size must be >= 1");
  if (max_snapshots < 1) throw ConfigError("max_snapshots must be >= 1");
  if (jobs > 1024) throw ConfigError("jobs must be <= 1024");
}

InputFormat ParseInputFormat(const std::string &name) {
  if (name == "auto") return InputFormat::kAuto;
  if (name == "xml") return InputFormat::kXml;
  if (name == "directory") return InputFormat::kDirectory;
  throw ConfigError("unknown input format '" + name + "' (expected auto, xml or directory)");
}

void ApplyConfig(const std::map<std::string, ConfigValue> &values, PipelineConfig *config) {
  auto non_negative = [](int64_t v, const std::string &key) {
    if (v < 0) throw ConfigError("config key " + key + " must be >= 0");
    return static_cast<uint64_t>(v);
  };
  for (const auto &[key, value] : values) {
    if (key == "language") {
      config->language = ConfigString(value, key);
    } else if (key == "input") {
      config->input = ConfigString(value, key);
    } else if (key == "format") {
      config->format = ParseInputFormat(ConfigString(value, key));
    } else if (key == "abbreviations") {
      config->abbreviations = ConfigString(value, key);
    } else if (key == "output_dir") {
      config->output_dir = ConfigString(value, key);
    } else if (key == "shard_size") {
      config->shard_size = non_negative(ConfigInt(value, key), key);
    } else if (key == "max_snapshots") {
      config->max_snapshots = non_negative(ConfigInt(value, key), key);
    } else if (key == "seed") {
      config->seed = non_negative(ConfigInt(value, key), key);
    } else if (key == "jobs") {
      config->jobs = non_negative(ConfigInt(value, key), key);
    } else if (key == "dump_sentences") {
      config->dump_sentences = ConfigBool(value, key);
    } else if (key == "align.window_k") {
      config->align.window_k = static_cast<int>(ConfigInt(value, key));
    } else if (key == "align.min_bleu") {
      config->align.min_bleu = ConfigDouble(value, key);
    } else if (key == "align.bleu_max_order") {
      config->align.bleu_max_order = static_cast<int>(ConfigInt(value, key));
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

std::string ExtractSummary::ToJson() const {
  ordered_json j;
  j["articles"] = articles;
  j["articles_failed"] = articles_failed;
  j["revisions"] = revisions;
  j["snapshot_pairs"] = snapshot_pairs;
  j["insertions"] = insertions;
  j["deletions"] = deletions;
  j["total"] = total();
  j["token_aligned"] = token_aligned;
  j["shards"] = shards;
  j["errors"] = errors;
  return j.dump(2) + "\n";
}

void WriteFileAtomically(const std::string &path, const std::string &content) {
  const fs::path target(path);
  const fs::path temp = target.parent_path() /
                        ("." + target.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + temp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(temp, ignored);
      throw std::runtime_error("failed writing " + temp.string());
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw std::runtime_error("cannot rename into " + path);
  }
}

std::vector<AtomicEdit> ExtractArticle(const ArticleRevisions &article,
                                       const PipelineConfig &config,
                                       std::vector<std::string> *latest_sentences) {
  const TextPipeline text(MakeIngestConfig(config));
  ArticleResult result = ProcessArticle(article, config, text);
  if (!result.error.empty()) throw std::runtime_error(result.error);
  if (latest_sentences) *latest_sentences = std::move(result.latest_sentences);
  return std::move(result.edits);
}

ExtractSummary RunExtract(const PipelineConfig &config, const ProgressCallback &progress) {
  config.Validate();
  if (config.output_dir.empty()) throw std::runtime_error("no output directory given");
  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec || !fs::is_directory(config.output_dir)) {
    throw std::runtime_error("cannot create output directory " + config.output_dir);
  }

  const IngestConfig ingest = MakeIngestConfig(config);
  const TextPipeline text(ingest);
  std::unique_ptr<ArticleSource> source = OpenArticleSource(config.input, ingest);

  const size_t jobs =
      config.jobs > 0 ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  const size_t batch_size = jobs * 8;

  ExtractSummary summary;
  std::string shard_buffer;
  size_t shard_records = 0;
  std::string sentences;
  auto flush_shard = [&] {
    if (shard_records == 0) return;
    const std::string name = ShardName(summary.shards.size());
    WriteFileAtomically((fs::path(config.output_dir) / name).string(), shard_buffer);
    summary.shards.push_back(name);
    shard_buffer.clear();
    shard_records = 0;
  };

  std::vector<ArticleRevisions> batch;
  bool more = true;
  while (more) {
    batch.clear();
    ArticleRevisions article;
    while (batch.size() < batch_size && (more = source->Next(&article))) {
      batch.push_back(std::move(article));
      article = ArticleRevisions();
    }
    if (batch.empty()) break;

    std::vector<ArticleResult> results(batch.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (size_t i; (i = next.fetch_add(1)) < batch.size();) {
        results[i] = ProcessArticle(batch[i], config, text);
      }
    };
    std::vector<std::thread> threads;
    for (size_t t = 1; t < std::min(jobs, batch.size()); ++t) threads.emplace_back(worker);
    worker();
    for (std::thread &t : threads) t.join();

    for (size_t i = 0; i < batch.size(); ++i) {
      ArticleResult &result = results[i];
      ++summary.articles;
      summary.revisions += result.revisions;
      summary.snapshot_pairs += result.pairs;
      if (!result.error.empty()) {
        ++summary.articles_failed;
        const std::string name =
            batch[i].article_id.empty() ? "article#" + std::to_string(summary.articles)
                                        : batch[i].article_id;
        summary.errors.push_back(name + ": " + result.error);
      }
      for (const AtomicEdit &edit : result.edits) {
        (edit.kind == EditKind::kInsertion ? summary.insertions : summary.deletions) += 1;
        summary.token_aligned += edit.token_aligned;
        shard_buffer += ToJsonLine(edit);
        shard_buffer += '\n';
        if (++shard_records == config.shard_size) flush_shard();
      }
      if (config.dump_sentences) {
        for (const std::string &s : result.latest_sentences) sentences += s + "\n";
        if (!result.latest_sentences.empty()) sentences += "\n";
      }
      if (progress) progress(summary);
    }
  }
  flush_shard();
  if (config.dump_sentences) {
    WriteFileAtomically((fs::path(config.output_dir) / "sentences.txt").string(), sentences);
  }
  WriteFileAtomically((fs::path(config.output_dir) / "summary.json").string(), summary.ToJson());
  return summary;
}

std::vector<std::string> ListShards(const std::string &path) {
  std::vector<std::string> out;
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    for (const auto &entry : fs::directory_iterator(path)) {
      const std::string name = entry.path().filename().string();
      if (entry.is_regular_file() && entry.path().extension() == ".jsonl" &&
          !name.starts_with(".")) {
        out.push_back(entry.path().string());
      }
    }
    std::sort(out.begin(), out.end());
  } else if (fs::exists(path, ec)) {
    out.push_back(path);
  } else {
    throw std::runtime_error("no such shard or directory: " + path);
  }
  return out;
}

ValidationReport ValidateCorpus(const std::vector<std::string> &paths) {
  ValidationReport report;
  std::set<std::string> seen_ids;
  for (const std::string &path : paths) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    ++report.shards;
    std::string line;
    size_t line_number = 0;
    while (std::getline(in, line)) {
      ++line_number;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      ++report.records;
      const std::string where = path + ":" + std::to_string(line_number);
      AtomicEdit edit;
      try {
        edit = ParseEditJson(line);
      } catch (const RecordFormatError &e) {
        report.violations.push_back(where + ": " + e.what());
        continue;
      }
      for (const std::string &problem : CheckEditInvariants(edit)) {
        report.violations.push_back(where + " " + edit.id + ": " + problem);
      }
      if (!seen_ids.insert(edit.id).second) {
        report.violations.push_back(where + " " + edit.id + ": duplicate id");
      }
    }
  }
  return report;
}

}  // namespace atomedit

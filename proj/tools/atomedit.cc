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

// atomedit: mine atomic insertions and deletions from revision histories
// and run the downstream analyses.
//
// Exit status: 0 on success, 1 on a fatal error or failed validation, 2 on
// a usage error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "CLI11.hpp"
#include "atomedit/annotations.h"
#include "atomedit/atomic_edit.h"
#include "atomedit/config_file.h"
#include "atomedit/conllu.h"
#include "atomedit/corpus_stats.h"
#include "atomedit/locate.h"
#include "atomedit/ngram_model.h"
#include "atomedit/pipeline.h"
#include "atomedit/pseudo_edits.h"
#include "json.hpp"

namespace {

using namespace atomedit;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFatal = 1;
constexpr int kExitUsage = 2;

void Log(const std::string &message) { std::cerr << "atomedit: " << message << "\n"; }

std::ifstream OpenInput(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  return in;
}

// Writes to the file at path, or to stdout when path is empty or "-".
void EmitOutput(const std::string &path, const std::string &content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
  } else {
    WriteFileAtomically(path, content);
  }
}

std::vector<AtomicEdit> LoadEdits(const std::vector<std::string> &inputs) {
  std::vector<AtomicEdit> edits;
  for (const std::string &input : inputs) {
    for (const std::string &path : ListShards(input)) {
      std::ifstream in = OpenInput(path);
      try {
        std::vector<AtomicEdit> part = ReadEdits(in);
        std::move(part.begin(), part.end(), std::back_inserter(edits));
      } catch (const RecordFormatError &e) {
        throw std::runtime_error(path + ": " + e.what());
      }
    }
  }
  return edits;
}

std::string EnvPath(const char *name) {
  const char *value = std::getenv(name);
  return value ? value : "";
}

// ---- extract ---------------------------------------------------------------

struct ExtractFlags {
  std::string config_path;
  PipelineConfig values;
  std::string format = "auto";
};

void AddExtract(CLI::App &app, ExtractFlags &flags, std::function<int()> *run) {
  CLI::App *cmd = app.add_subcommand("extract", "Mine atomic edits from a revision dump");
  PipelineConfig &v = flags.values;
  cmd->add_option("--config", flags.config_path, "TOML configuration file");
  auto *in = cmd->add_option("--in", v.input, "XML dump (.xml or .gz), directory, or -");
  auto *out = cmd->add_option("--out", v.output_dir, "Output directory for shards");
  auto *language = cmd->add_option("--language", v.language, "Language code");
  auto *format = cmd->add_option("--format", flags.format, "auto, xml or directory")
                     ->check(CLI::IsMember({"auto", "xml", "directory"}));
  auto *abbrev = cmd->add_option("--abbreviations", v.abbreviations, "Abbreviation list file");
  auto *window = cmd->add_option("--window-k", v.align.window_k, "Alignment window half-width")
                     ->check(CLI::NonNegativeNumber);
  auto *min_bleu = cmd->add_option("--min-bleu", v.align.min_bleu, "Minimum alignment BLEU")
                       ->check(CLI::Range(0.0, 1.0));
  auto *order = cmd->add_option("--bleu-max-order", v.align.bleu_max_order, "BLEU n-gram order")
                    ->check(CLI::PositiveNumber);
  auto *shard = cmd->add_option("--shard-size", v.shard_size, "Records per shard")
                    ->check(CLI::PositiveNumber);
  auto *snapshots = cmd->add_option("--max-snapshots", v.max_snapshots,
                                    "Most recent revisions kept per article")
                        ->check(CLI::PositiveNumber);
  auto *jobs = cmd->add_option("--jobs", v.jobs, "Worker threads (0 = all cores)");
  auto *seed = cmd->add_option("--seed", v.seed, "Run seed");
  auto *dump = cmd->add_flag("--dump-sentences", v.dump_sentences,
                             "Also write sentences.txt from each article's latest revision");

  *run = [&flags, cmd, in, out, language, format, abbrev, window, min_bleu, order, shard,
          snapshots, jobs, seed, dump]() {
    // Precedence: flags, then ATOMEDIT_* environment paths, then the config
    // file, then defaults.
    const PipelineConfig from_flags = flags.values;
    PipelineConfig config;
    if (!flags.config_path.empty()) ApplyConfig(ParseConfigFile(flags.config_path), &config);
    if (auto p = EnvPath("ATOMEDIT_INPUT"); !p.empty()) config.input = p;
    if (auto p = EnvPath("ATOMEDIT_OUTPUT_DIR"); !p.empty()) config.output_dir = p;
    if (auto p = EnvPath("ATOMEDIT_ABBREVIATIONS"); !p.empty()) config.abbreviations = p;
    if (in->count()) config.input = from_flags.input;
    if (out->count()) config.output_dir = from_flags.output_dir;
    if (language->count()) config.language = from_flags.language;
    if (format->count()) config.format = ParseInputFormat(flags.format);
    if (abbrev->count()) config.abbreviations = from_flags.abbreviations;
    if (window->count()) config.align.window_k = from_flags.align.window_k;
    if (min_bleu->count()) config.align.min_bleu = from_flags.align.min_bleu;
    if (order->count()) config.align.bleu_max_order = from_flags.align.bleu_max_order;
    if (shard->count()) config.shard_size = from_flags.shard_size;
    if (snapshots->count()) config.max_snapshots = from_flags.max_snapshots;
    if (jobs->count()) config.jobs = from_flags.jobs;
    if (seed->count()) config.seed = from_flags.seed;
    if (dump->count()) config.dump_sentences = true;
    if (config.input.empty()) throw CLI::ValidationError("--in", "no input given");
    if (config.output_dir.empty()) throw CLI::ValidationError("--out", "no output directory given");

    int64_t reported = 0;
    const ExtractSummary summary = RunExtract(config, [&](const ExtractSummary &s) {
      while (reported < static_cast<int64_t>(s.errors.size())) Log(s.errors[reported++]);
      if (s.articles % 1000 == 0) {
        Log(std::to_string(s.articles) + " articles, " + std::to_string(s.total()) + " edits");
      }
    });
    std::cout << summary.ToJson();
    return kExitOk;
  };
}

// ---- validate --------------------------------------------------------------

void AddValidate(CLI::App &app, std::vector<std::string> &inputs, std::function<int()> *run) {
  CLI::App *cmd = app.add_subcommand("validate", "Re-check every record of a corpus");
  cmd->add_option("--in", inputs, "Shard files or directories")->required();
  *run = [&inputs]() {
    std::vector<std::string> paths;
    for (const std::string &input : inputs) {
      for (std::string &p : ListShards(input)) paths.push_back(std::move(p));
    }
    const ValidationReport report = ValidateCorpus(paths);
    ordered_json j;
    j["shards"] = report.shards;
    j["records"] = report.records;
    j["violations"] = report.violations.size();
    j["details"] = report.violations;
    std::cout << j.dump(2) << "\n";
    for (const std::string &v : report.violations) Log("violation: " + v);
    return report.ok() ? kExitOk : kExitFatal;
  };
}

// ---- stats / pos-rates -----------------------------------------------------

struct StatsFlags {
  std::vector<std::string> edits;
  std::string tags;
  std::string background;
  std::string background_format = "conllu";
  bool xpos = false;
  bool all_kinds = false;
  bool all_lengths = false;
  std::string pos;
  size_t top = 0;
  int64_t min_count = 5;
  bool ascending = false;
  std::string out;
  std::string pos_table;
};

BackgroundCorpus LoadBackground(const StatsFlags &flags) {
  std::ifstream in = OpenInput(flags.background);
  return flags.background_format == "tsv" ? ReadBackgroundTsv(in)
                                          : ReadBackgroundConllu(in, flags.xpos);
}

ordered_json DistributionJson(const PosDistribution &d) {
  ordered_json j;
  j["total"] = d.total;
  j["untagged"] = d.untagged;
  ordered_json freq = ordered_json::object();
  for (const auto &[pos, f] : d.frequency) freq[pos] = f;
  j["frequency"] = freq;
  return j;
}

void AddStatsOptions(CLI::App *cmd, StatsFlags &flags) {
  cmd->add_option("--edits", flags.edits, "Edit shards or directories")->required();
  cmd->add_option("--background-format", flags.background_format, "conllu or tsv")
      ->check(CLI::IsMember({"conllu", "tsv"}));
  cmd->add_flag("--xpos", flags.xpos, "Read XPOS instead of UPOS from CoNLL-U");
  cmd->add_flag("--all-kinds", flags.all_kinds, "Count deletions as well as insertions");
  cmd->add_flag("--all-lengths", flags.all_lengths, "Count multi-word phrases too");
  cmd->add_option("--out", flags.out, "Output file (default stdout)");
}

void AddStats(CLI::App &app, StatsFlags &flags, std::function<int()> *run) {
  CLI::App *cmd = app.add_subcommand("stats", "Phrase lengths and POS distributions");
  AddStatsOptions(cmd, flags);
  cmd->add_option("--tags", flags.tags, "POS tag sidecar TSV for phrase tokens");
  cmd->add_option("--background", flags.background, "Tagged background corpus");
  cmd->add_option("--pos-table", flags.pos_table,
                  "Also write a pos<TAB>freq_ins<TAB>freq_gen table here");
  *run = [&flags]() {
    const std::vector<AtomicEdit> edits = LoadEdits(flags.edits);
    const LengthHistogram histogram = ComputeLengthHistogram(edits);
    ordered_json j;
    j["records"] = edits.size();
    ordered_json lengths = ordered_json::object();
    for (const auto &[length, count] : histogram.counts) lengths[std::to_string(length)] = count;
    j["phrase_length"] = {{"counts", lengths},
                          {"fraction_single", histogram.fraction_single},
                          {"fraction_shorter_than_5", histogram.fraction_shorter_than_5}};
    const EditSelection selection{!flags.all_lengths, !flags.all_kinds};
    PosDistribution inserted;
    PosDistribution general;
    if (!flags.tags.empty()) {
      std::ifstream in = OpenInput(flags.tags);
      const TagSidecar tags = ReadTagSidecar(in);
      j["tagset"] = tags.tagset;
      inserted = ComputePosDistribution(edits, tags, selection);
      j["inserted_pos"] = DistributionJson(inserted);
    }
    if (!flags.background.empty()) {
      const BackgroundCorpus background = LoadBackground(flags);
      general = ComputeBackgroundDistribution(background.tokens);
      j["background_pos"] = DistributionJson(general);
    }
    if (!flags.pos_table.empty()) {
      std::map<std::string, std::pair<double, double>> rows;
      for (const auto &[pos, f] : inserted.frequency) rows[pos].first = f;
      for (const auto &[pos, f] : general.frequency) rows[pos].second = f;
      std::ostringstream table;
      table << "pos\tfreq_ins\tfreq_gen\n" << std::setprecision(6);
      for (const auto &[pos, f] : rows) table << pos << '\t' << f.first << '\t' << f.second << '\n';
      WriteFileAtomically(flags.pos_table, table.str());
    }
    EmitOutput(flags.out, j.dump(2) + "\n");
    return kExitOk;
  };
}

void AddPosRates(CLI::App &app, StatsFlags &flags, std::function<int()> *run) {
  CLI::App *cmd = app.add_subcommand("pos-rates",
                                     "Per-thousand insertion rate against a background corpus");
  AddStatsOptions(cmd, flags);
  cmd->add_option("--tags", flags.tags, "POS tag sidecar TSV for phrase tokens")->required();
  cmd->add_option("--background", flags.background, "Tagged background corpus")->required();
  cmd->add_option("--pos", flags.pos, "POS tag to rank")->required();
  cmd->add_option("--top", flags.top, "Rows to print (0 = all)");
  cmd->add_option("--min-count", flags.min_count, "Minimum insertions per word");
  cmd->add_flag("--ascending", flags.ascending, "Least over-inserted words first");
  *run = [&flags]() {
    const std::vector<AtomicEdit> edits = LoadEdits(flags.edits);
    std::ifstream in = OpenInput(flags.tags);
    const TagSidecar tags = ReadTagSidecar(in);
    const BackgroundCorpus background = LoadBackground(flags);
    if (!tags.tagset.empty() && !background.tagset.empty() && tags.tagset != background.tagset) {
      throw std::runtime_error("tagset mismatch: " + tags.tagset + " vs " + background.tagset);
    }
    RateOptions options;
    options.pos = flags.pos;
    options.top_n = flags.top;
    options.min_count = flags.min_count;
    options.ascending = flags.ascending;
    options.selection = {!flags.all_lengths, !flags.all_kinds};
    std::ostringstream out;
    out << "word\trate_ins\trate_gen\tcount_ins\tcount_gen\tratio\tsmoothed\n";
    out << std::setprecision(6);
    for (const RateRatio &r : ComputeRateRatios(edits, tags, background.tokens, options)) {
      out << r.word << '\t' << r.rate_insertion << '\t' << r.rate_general << '\t'
          << r.count_insertion << '\t' << r.count_general << '\t' << r.ratio() << '\t'
          << (r.smoothed ? "yes" : "no") << '\n';
    }
    EmitOutput(flags.out, out.str());
    return kExitOk;
  };
}

// ---- language model and locator -------------------------------------------

struct LmFlags {
  std::string in;
  std::string out;
  std::string arpa;
  std::string language = "en";
  NGramTrainOptions train;
  std::string model;
  std::vector<std::string> edits;
  bool uniform = false;
  bool include_deletions = false;
  std::string preds;
};

void AddTrainLm(CLI::App &app, LmFlags &flags, std::function<int()> *run) {
  CLI::App *cmd = app.add_subcommand("train-lm", "Train a Kneser-Ney n-gram model");
  cmd->add_option("--in", flags.in, "Training text, one sentence per line")->required();
  cmd->add_option("--out", flags.out, "Binary model output")->required();
  cmd->add_option("--order", flags.train.order, "N-gram order")->check(CLI::Range(1, 16));
  cmd->add_option("--discount", flags.train.discount,
                  "Absolute discount in (0,1); <= 0 estimates per level");
  cmd->add_option("--unk-threshold", flags.train.unk_threshold,
                  "Tokens seen fewer times become <unk>");
  cmd->add_option("--language", flags.language, "Tokenization language");
  cmd->add_option("--arpa", flags.arpa, "Also write the model as ARPA text");
  *run = [&flags]() {
    std::ifstream in = OpenInput(flags.in);
    std::vector<std::vector<std::string>> corpus;
    std::string line;
    while (std::getline(in, line)) {
      Sentence sentence = Tokenize(line, flags.language);
      if (!sentence.tokens.empty()) corpus.push_back(std::move(sentence.tokens));
    }
    const NGramModel model = NGramModel::Train(corpus, flags.train);
    std::ostringstream bytes;
    model.Save(bytes);
    WriteFileAtomically(flags.out, bytes.str());
    if (!flags.arpa.empty()) {
      std::ostringstream arpa;
      model.WriteArpa(arpa);
      WriteFileAtomically(flags.arpa, arpa.str());
    }
    Log("trained order-" + std::to_string(model.order()) + " model on " +
        std::to_string(corpus.size()) + " sentences, vocabulary " +
        std::to_string(model.vocabulary().size()));
    return kExitOk;
  };
}

void AddLocate(CLI::App &app, LmFlags &flags, std::function<int()> *run) {
  CLI::App *cmd = app.add_subcommand("locate", "Predict insertion points with a language model");
  auto *model_opt = cmd->add_option("--model", flags.model, "Binary model from train-lm");
  cmd->add_flag("--uniform", flags.uniform, "Score with a constant model (control)");
  cmd->add_option("--edits", flags.edits, "Edit shards or directories")->required();
  cmd->add_option("--out", flags.out, "Predictions JSONL (default stdout)");
  cmd->add_flag("--include-deletions", flags.include_deletions,
                "Also locate deleted phrases in the shortened sentence");
  model_opt->excludes(cmd->get_option("--uniform"));
  *run = [&flags]() {
    if (flags.model.empty() && !flags.uniform) {
      throw CLI::ValidationError("--model", "a model or --uniform is required");
    }
    std::unique_ptr<SentenceScorer> scorer;
    if (flags.uniform) {
      scorer = std::make_unique<UniformScorer>(1);
    } else {
      scorer = std::make_unique<NGramModel>(NGramModel::LoadFile(flags.model));
    }
    const std::vector<AtomicEdit> edits = LoadEdits(flags.edits);
    std::string out;
    int64_t skipped = 0;
    for (const AtomicEdit &edit : edits) {
      if (edit.kind == EditKind::kDeletion && !flags.include_deletions) continue;
      if (!edit.token_aligned || edit.shorter().tokens.empty() || edit.phrase_tokens.empty()) {
        ++skipped;
        continue;
      }
      out += PredictionToJsonLine(LocateEdit(*scorer, edit)) + "\n";
    }
    if (skipped) Log("skipped " + std::to_string(skipped) + " records that are not token aligned");
    EmitOutput(flags.out, out);
    return kExitOk;
  };
}

void AddEvalLocate(CLI::App &app, LmFlags &flags, std::function<int()> *run) {
  CLI::App *cmd = app.add_subcommand("eval-locate", "Accuracy of insertion-point predictions");
  cmd->add_option("--preds", flags.preds, "Predictions JSONL")->required();
  *run = [&flags]() {
    std::ifstream in = OpenInput(flags.preds);
    const std::vector<LocatePrediction> predictions = ReadPredictions(in);
    std::cout << AccuracyReportJson(EvalAccuracy(predictions)) << "\n";
    return kExitOk;
  };
}

// ---- pseudo-edits ----------------------------------------------------------

struct PseudoFlags {
  std::string in;
  std::string out;
  std::string marked;
  std::string language = "en";
  uint64_t n = 0;
  uint64_t seed = 0;
};

void AddPseudo(CLI::App &app, PseudoFlags &flags, std::function<int()> *run) {
  CLI::App *cmd = app.add_subcommand("pseudo", "Simulate insertions from a parsed corpus");
  cmd->add_option("--in", flags.in, "CoNLL-U corpus")->required();
  cmd->add_option("--out", flags.out, "AtomicEdit JSONL (default stdout)");
  cmd->add_option("--marked", flags.marked, "Also write marked_input<TAB>target_phrase TSV");
  cmd->add_option("--n", flags.n, "Maximum records (0 = one per eligible sentence)");
  cmd->add_option("--seed", flags.seed, "Random seed");
  cmd->add_option("--language", flags.language, "Language code for the records");
  *run = [&flags]() {
    std::ifstream in = OpenInput(flags.in);
    ConlluReader reader(in);
    ConlluBlock block;
    std::string jsonl;
    std::string marked;
    uint64_t ordinal = 0;
    uint64_t written = 0;
    int64_t errors = 0;
    while ((flags.n == 0 || written < flags.n) && reader.Next(&block)) {
      const uint64_t sentence_seed = DeriveSentenceSeed(flags.seed, ordinal++);
      if (!block.sentence) {
        ++errors;
        Log("sentence " + block.sent_id + " (line " + std::to_string(block.first_line) +
            "): " + block.error);
        continue;
      }
      const auto edit = GeneratePseudoEdit(*block.sentence, sentence_seed, flags.language);
      if (!edit) continue;
      jsonl += ToJsonLine(*edit) + "\n";
      if (!flags.marked.empty()) marked += EmitMarked(*edit) + "\t" + edit->phrase + "\n";
      ++written;
    }
    EmitOutput(flags.out, jsonl);
    if (!flags.marked.empty()) WriteFileAtomically(flags.marked, marked);
    Log("wrote " + std::to_string(written) + " pseudo-edits from " + std::to_string(ordinal) +
        " sentences (" + std::to_string(errors) + " rejected)");
    return kExitOk;
  };
}

// ---- annotation and generation metrics -------------------------------------

struct EvalFlags {
  std::string annotations;
  std::vector<std::string> edits;
  std::string proposals;
  std::string embeddings;
  std::string language = "en";
  size_t k = 10;
};

void AddEvalAnnotations(CLI::App &app, EvalFlags &flags, std::function<int()> *run) {
  CLI::App *cmd = app.add_subcommand("eval-annotations",
                                     "Error rates and annotator agreement with editors");
  cmd->add_option("--annotations", flags.annotations, "Annotation TSV")->required();
  cmd->add_option("--edits", flags.edits, "Gold edit shards (enables agreement)");
  *run = [&flags]() {
    std::ifstream in = OpenInput(flags.annotations);
    const std::vector<Annotation> annotations = ReadAnnotations(in);
    std::vector<AtomicEdit> gold;
    std::vector<std::string> ids;
    if (!flags.edits.empty()) {
      gold = LoadEdits(flags.edits);
      for (const AtomicEdit &e : gold) ids.push_back(e.id);
    }
    const ErrorRateSummary s = SummarizeErrorRates(annotations, ids);
    ordered_json j;
    j["error_rates"] = {{"records", s.records},
                        {"no_error", s.no_error},
                        {"possible_error", s.possible_error},
                        {"clear_error", s.clear_error},
                        {"unannotated", s.unannotated}};
    if (!gold.empty()) {
      const AgreementReport a = AnnotatorAgreement(annotations, gold);
      j["agreement"] = {{"per_annotation", a.per_annotation},
                        {"per_record", a.per_record},
                        {"annotations_compared", a.annotations_compared},
                        {"records_compared", a.records_compared},
                        {"excluded_unaligned", a.excluded_unaligned}};
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  };
}

void AddEvalPhrases(CLI::App &app, EvalFlags &flags, std::function<int()> *run) {
  CLI::App *cmd = app.add_subcommand("eval-phrases", "Exact match @k and similarity @1");
  cmd->add_option("--proposals", flags.proposals, "Ranked proposals JSONL")->required();
  cmd->add_option("--edits", flags.edits, "Gold edit shards")->required();
  cmd->add_option("--k", flags.k, "Cut-off for exact match")->check(CLI::PositiveNumber);
  cmd->add_option("--embeddings", flags.embeddings, "Word vectors (text format)");
  cmd->add_option("--language", flags.language, "Tokenization language for similarity");
  *run = [&flags]() {
    std::ifstream in = OpenInput(flags.proposals);
    const std::vector<Proposals> proposals = ReadProposals(in);
    std::unordered_map<std::string, std::string> gold;
    for (const AtomicEdit &e : LoadEdits(flags.edits)) gold[e.id] = e.phrase;
    ordered_json j;
    j["records"] = proposals.size();
    j["k"] = flags.k;
    j["exact_match"] = ExactMatchAtK(proposals, gold, flags.k);
    if (!flags.embeddings.empty()) {
      const EmbeddingTable table = EmbeddingTable::ReadFile(flags.embeddings);
      j["similarity_at_1"] = SimilarityAt1(proposals, gold, table, flags.language);
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  };
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Mine and analyze atomic Wikipedia edits", "atomedit"};
  app.require_subcommand(1);

  ExtractFlags extract_flags;
  std::vector<std::string> validate_inputs;
  StatsFlags stats_flags;
  StatsFlags rates_flags;
  LmFlags lm_flags;
  PseudoFlags pseudo_flags;
  EvalFlags eval_flags;

  std::vector<std::function<int()>> runs(10);
  AddExtract(app, extract_flags, &runs[0]);
  AddValidate(app, validate_inputs, &runs[1]);
  AddStats(app, stats_flags, &runs[2]);
  AddPosRates(app, rates_flags, &runs[3]);
  AddTrainLm(app, lm_flags, &runs[4]);
  AddLocate(app, lm_flags, &runs[5]);
  AddEvalLocate(app, lm_flags, &runs[6]);
  AddPseudo(app, pseudo_flags, &runs[7]);
  AddEvalAnnotations(app, eval_flags, &runs[8]);
  AddEvalPhrases(app, eval_flags, &runs[9]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError &e) {
    std::cerr << "atomedit: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const auto subcommands = app.get_subcommands();
  CLI::App *chosen = subcommands.front();
  const auto all = app.get_subcommands({});
  for (size_t i = 0; i < all.size(); ++i) {
    if (all[i] != chosen) continue;
    try {
      return runs[i]();
    } catch (const CLI::ValidationError &e) {
      std::cerr << "atomedit: " << e.what() << "\n\n" << chosen->help();
      return kExitUsage;
    } catch (const ConfigError &e) {
      Log(std::string("configuration error: ") + e.what());
      return kExitUsage;
    } catch (const std::exception &e) {
      Log(std::string("error: ") + e.what());
      return kExitFatal;
    }
  }
  return kExitUsage;
}

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

#include "fixtures.h"

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "atomedit/bleu.h"

namespace atomedit::testing {

namespace {

// Draws in [0, bound); the slight modulo bias is irrelevant for fixtures and
// keeps the output identical across standard libraries.
size_t Below(std::mt19937_64 &rng, size_t bound) { return static_cast<size_t>(rng() % bound); }

size_t Between(std::mt19937_64 &rng, size_t low, size_t high) {
  return low + Below(rng, high - low + 1);
}

double Unit(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <typename T>
void Shuffle(std::mt19937_64 &rng, std::vector<T> *items) {
  for (size_t i = items->size(); i > 1; --i) std::swap((*items)[i - 1], (*items)[Below(rng, i)]);
}

Sentence MakeSentence(const std::vector<std::string> &tokens) {
  return Tokenize(JoinTokens(tokens, " "), "en");
}

bool IsSubject(const std::string &deprel) {
  return deprel == "nsubj" || deprel.rfind("nsubj:", 0) == 0;
}

}  // namespace

std::string DataDir() { return ATOMEDIT_TEST_DATA_DIR; }

std::string CliPath() { return ATOMEDIT_CLI_PATH; }

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream contents;
  contents << in.rdbuf();
  return contents.str();
}

std::string MakeTempDir(const std::string &prefix) {
  std::string pattern =
      (std::filesystem::temp_directory_path() / (prefix + "-XXXXXX")).string();
  if (::mkdtemp(pattern.data()) == nullptr) {
    throw std::runtime_error("cannot create temporary directory " + pattern);
  }
  return pattern;
}

int RunCommand(const std::string &command) {
  const int status = std::system(command.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

// --- Atomic diff -------------------------------------------------------------

std::vector<size_t> BruteForceInsertionOffsets(const std::string &s, const std::string &t) {
  std::vector<size_t> offsets;
  if (t.size() <= s.size()) return offsets;
  const size_t phrase_length = t.size() - s.size();
  for (size_t a = 0; a <= s.size(); ++a) {
    const std::string candidate = s.substr(0, a) + t.substr(a, phrase_length) + s.substr(a);
    if (candidate == t) offsets.push_back(a);
  }
  return offsets;
}

std::vector<std::string> EnumerateStrings(const std::string &alphabet, size_t max_length) {
  std::vector<std::string> out{""};
  size_t level_start = 0;
  for (size_t length = 1; length <= max_length; ++length) {
    const size_t level_end = out.size();
    for (size_t i = level_start; i < level_end; ++i) {
      for (char c : alphabet) out.push_back(out[i] + c);
    }
    level_start = level_end;
  }
  return out;
}

// --- Sentence alignment --------------------------------------------------------

SnapshotPairFixture GenerateSnapshotPair(std::mt19937_64 &rng) {
  size_t next_word = 0;
  auto fresh = [&](size_t count) {
    std::vector<std::string> words;
    for (size_t i = 0; i < count; ++i) words.push_back("w" + std::to_string(next_word++));
    return words;
  };

  std::vector<std::vector<std::string>> base;
  const size_t sentences = Between(rng, 10, 50);
  for (size_t i = 0; i < sentences; ++i) base.push_back(fresh(Between(rng, 6, 20)));

  std::vector<std::vector<std::string>> edited = base;
  size_t move_budget = 5;
  const size_t edits = Between(rng, 1, 3);
  for (size_t e = 0; e < edits; ++e) {
    const size_t type = Below(rng, move_budget > 0 ? 4 : 2);
    if (type == 0) {  // phrase insertion
      auto &tokens = edited[Below(rng, edited.size())];
      const auto phrase = fresh(Between(rng, 1, 3));
      tokens.insert(tokens.begin() + Below(rng, tokens.size() + 1), phrase.begin(), phrase.end());
    } else if (type == 1) {  // phrase deletion
      auto &tokens = edited[Below(rng, edited.size())];
      if (tokens.size() < 5) continue;
      const size_t length = Between(rng, 1, 3);
      const size_t start = Below(rng, tokens.size() - length + 1);
      tokens.erase(tokens.begin() + start, tokens.begin() + start + length);
    } else if (type == 2) {  // block of new sentences
      const size_t count = Between(rng, 1, move_budget);
      move_budget -= count;
      const size_t at = Below(rng, edited.size() + 1);
      for (size_t k = 0; k < count; ++k) {
        edited.insert(edited.begin() + at, fresh(Between(rng, 6, 20)));
      }
    } else {  // block of sentences removed
      const size_t count = std::min(Between(rng, 1, move_budget), edited.size() - 1);
      move_budget -= count;
      const size_t at = Below(rng, edited.size() - count + 1);
      edited.erase(edited.begin() + at, edited.begin() + at + count);
    }
  }

  SnapshotPairFixture fixture;
  for (const auto &tokens : base) fixture.base.push_back(MakeSentence(tokens));
  for (const auto &tokens : edited) fixture.edited.push_back(MakeSentence(tokens));
  return fixture;
}

SnapshotPairFixture DisplacedEditFixture(size_t displacement) {
  std::vector<std::vector<std::string>> base;
  for (size_t i = 0; i < 20; ++i) {
    std::vector<std::string> tokens;
    for (size_t w = 0; w < 8; ++w) tokens.push_back("s" + std::to_string(i) + "w" + std::to_string(w));
    base.push_back(tokens);
  }
  std::vector<std::vector<std::string>> edited;
  for (size_t i = 0; i < displacement; ++i) {
    edited.push_back({"new" + std::to_string(i), "material", "added", "here"});
  }
  edited.insert(edited.end(), base.begin(), base.end());
  auto &target = edited[2 + displacement];
  target.insert(target.begin() + 3, "inserted");

  SnapshotPairFixture fixture;
  for (const auto &tokens : base) fixture.base.push_back(MakeSentence(tokens));
  for (const auto &tokens : edited) fixture.edited.push_back(MakeSentence(tokens));
  return fixture;
}

std::vector<AlignedPair> ReferenceAlign(const std::vector<Sentence> &base,
                                        const std::vector<Sentence> &edited,
                                        const AlignConfig &config) {
  std::vector<AlignedPair> pairs;
  for (size_t i = 0; i < base.size(); ++i) {
    if (i < edited.size() && base[i].text == edited[i].text) continue;
    bool found = false;
    AlignedPair best{i, 0, 0.0};
    for (size_t j = 0; j < edited.size(); ++j) {
      const double score = SentenceBleu(base[i].tokens, edited[j].tokens, config.bleu_max_order);
      const size_t distance = j > i ? j - i : i - j;
      const size_t best_distance =
          best.edited_index > i ? best.edited_index - i : i - best.edited_index;
      if (!found || score > best.bleu ||
          (score == best.bleu &&
           (distance < best_distance || (distance == best_distance && j < best.edited_index)))) {
        best = {i, j, score};
        found = true;
      }
    }
    if (!found || best.bleu < config.min_bleu) continue;
    if (base[i].text == edited[best.edited_index].text) continue;
    pairs.push_back(best);
  }
  return pairs;
}

// --- Language model --------------------------------------------------------------

std::vector<std::vector<std::string>> SyntheticCorpus(size_t total_tokens, size_t vocab_size,
                                                      uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> cdf(vocab_size);
  double sum = 0.0;
  for (size_t r = 0; r < vocab_size; ++r) {
    sum += 1.0 / static_cast<double>(r + 1);
    cdf[r] = sum;
  }
  std::vector<std::vector<std::string>> corpus;
  size_t produced = 0;
  while (produced < total_tokens) {
    const size_t length = Between(rng, 4, 16);
    std::vector<std::string> sentence;
    for (size_t k = 0; k < length; ++k) {
      const double u = Unit(rng) * sum;
      const size_t rank = std::min<size_t>(
          std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin(), vocab_size - 1);
      sentence.push_back("t" + std::to_string(rank));
    }
    produced += length;
    corpus.push_back(std::move(sentence));
  }
  return corpus;
}

std::vector<HeldInEdit> HeldInEdits(const std::vector<std::vector<std::string>> &corpus,
                                    size_t count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<size_t> candidates;
  for (size_t i = 0; i < corpus.size(); ++i) {
    if (corpus[i].size() >= 4) candidates.push_back(i);
  }
  Shuffle(rng, &candidates);
  std::vector<HeldInEdit> edits;
  for (size_t c = 0; c < candidates.size() && edits.size() < count; ++c) {
    const auto &tokens = corpus[candidates[c]];
    const size_t length = Between(rng, 1, 3);
    const size_t start = Below(rng, tokens.size() - length + 1);
    HeldInEdit edit;
    edit.phrase_tokens.assign(tokens.begin() + start, tokens.begin() + start + length);
    edit.base_tokens.assign(tokens.begin(), tokens.begin() + start);
    edit.base_tokens.insert(edit.base_tokens.end(), tokens.begin() + start + length, tokens.end());
    edit.gold_index = start;
    edits.push_back(std::move(edit));
  }
  return edits;
}

// --- Dependency trees ------------------------------------------------------------

namespace {

void BuildProjective(std::mt19937_64 &rng, size_t lo, size_t hi, size_t parent,
                     std::vector<size_t> *heads) {
  if (lo > hi) return;
  const size_t h = Between(rng, lo, hi);
  (*heads)[h] = parent;
  // Children ranges on each side are split into random chunks.
  auto build_side = [&](size_t from, size_t to) {
    while (from <= to) {
      const size_t end = Between(rng, from, to);
      BuildProjective(rng, from, end, h + 1, heads);
      from = end + 1;
    }
  };
  if (h > lo) build_side(lo, h - 1);
  build_side(h + 1, hi);
}

}  // namespace

std::string GenerateTreebank(size_t count, uint64_t seed) {
  static const std::vector<std::string> kRelations = {
      "nsubj", "nsubj:pass", "obj", "obl", "amod", "det", "advmod", "case", "nmod", "conj",
      "punct", "mark",       "obl:tmod"};
  static const std::vector<std::string> kPos = {"NOUN", "VERB", "ADJ", "ADV",
                                                "DET",  "ADP",  "PRON", "PROPN"};
  static const std::vector<std::string> kPunct = {".", ",", "!", ";", "?"};
  static const std::vector<std::string> kStems = {"river", "café", "stone", "naïve", "light",
                                                  "über",  "hall", "mark",  "old",   "grün"};
  std::mt19937_64 rng(seed);
  std::ostringstream out;
  for (size_t s = 0; s < count; ++s) {
    const size_t n = Between(rng, 1, 18);
    std::vector<size_t> heads(n, 0);
    if (Below(rng, 2) == 0) {
      BuildProjective(rng, 0, n - 1, 0, &heads);
    } else {
      std::vector<size_t> order(n);
      for (size_t i = 0; i < n; ++i) order[i] = i;
      Shuffle(rng, &order);
      for (size_t k = 1; k < n; ++k) heads[order[k]] = order[Below(rng, k)] + 1;
    }
    std::vector<std::string> forms(n), upos(n), deprels(n);
    std::vector<bool> space_after(n, true);
    for (size_t i = 0; i < n; ++i) {
      if (heads[i] == 0) {
        deprels[i] = "root";
      } else {
        deprels[i] = kRelations[Below(rng, kRelations.size())];
      }
      if (deprels[i] == "punct") {
        upos[i] = "PUNCT";
        forms[i] = kPunct[Below(rng, kPunct.size())];
      } else {
        upos[i] = kPos[Below(rng, kPos.size())];
        forms[i] = kStems[Below(rng, kStems.size())] + std::to_string(Below(rng, 40));
      }
    }
    for (size_t i = 0; i + 1 < n; ++i) {
      if ((upos[i + 1] == "PUNCT" && Below(rng, 5) != 0) || Below(rng, 20) == 0) {
        space_after[i] = false;
      }
    }
    std::string text;
    for (size_t i = 0; i < n; ++i) {
      text += forms[i];
      if (i + 1 < n && space_after[i]) text += ' ';
    }

    out << "# sent_id = gen-" << s << "\n# text = " << text << "\n";
    const size_t multiword_at = n >= 2 && Below(rng, 20) == 0 ? Below(rng, n - 1) : n;
    const size_t empty_after = Below(rng, 20) == 0 ? Below(rng, n) : n;
    for (size_t i = 0; i < n; ++i) {
      if (i == multiword_at) {
        out << i + 1 << "-" << i + 2 << "\t" << forms[i] << forms[i + 1]
            << "\t_\t_\t_\t_\t_\t_\t_\t_\n";
      }
      out << i + 1 << "\t" << forms[i] << "\t" << forms[i] << "\t" << upos[i] << "\t_\t_\t"
          << heads[i] << "\t" << deprels[i] << "\t_\t" << (space_after[i] ? "_" : "SpaceAfter=No")
          << "\n";
      if (i == empty_after) {
        out << i + 1 << ".1\telided\t_\tVERB\t_\t_\t_\t_\t" << (heads[i] == 0 ? 0 : heads[i])
            << ":conj\t_\n";
      }
    }
    out << "\n";
  }
  return out.str();
}

std::vector<OracleSpan> DescendantEnumerationSpans(const ParsedSentence &sentence) {
  const size_t n = sentence.size();
  std::vector<std::vector<size_t>> children(n);
  for (size_t i = 0; i < n; ++i) {
    if (sentence.heads[i] != 0) children[sentence.heads[i] - 1].push_back(i);
  }
  std::vector<OracleSpan> spans;
  for (size_t root = 0; root < n; ++root) {
    std::vector<size_t> members;
    std::vector<size_t> stack{root};
    while (!stack.empty()) {
      const size_t node = stack.back();
      stack.pop_back();
      members.push_back(node);
      for (size_t child : children[node]) stack.push_back(child);
    }
    std::sort(members.begin(), members.end());
    bool contiguous = true;
    for (size_t k = 1; k < members.size(); ++k) contiguous &= members[k] == members[k - 1] + 1;
    if (!contiguous) continue;
    if (members.size() == n) continue;
    if (IsSubject(sentence.deprels[root])) continue;
    if (members.size() == 1 && sentence.upos[root] == "PUNCT") continue;
    spans.push_back({root, members.front(), members.back()});
  }
  std::sort(spans.begin(), spans.end());
  return spans;
}

std::vector<std::string> CheckPseudoEdit(const ParsedSentence &sentence, const AtomicEdit &edit) {
  std::vector<std::string> problems;
  auto fail = [&](const std::string &message) { problems.push_back(edit.id + ": " + message); };
  const size_t n = sentence.size();

  if (edit.kind != EditKind::kInsertion) fail("not an insertion");
  if (edit.provenance != "pseudo") fail("provenance is not pseudo");
  if (!edit.token_aligned || !edit.token_index) {
    fail("not token aligned");
    return problems;
  }
  const size_t start = *edit.token_index;
  const size_t length = edit.phrase_tokens.size();
  if (length == 0 || start + length > n) {
    fail("span out of range");
    return problems;
  }
  const size_t end = start + length - 1;

  // Contiguity and full subtree: the positions must be exactly the
  // descendants of one node.
  std::vector<std::vector<size_t>> children(n);
  for (size_t i = 0; i < n; ++i) {
    if (sentence.heads[i] != 0) children[sentence.heads[i] - 1].push_back(i);
  }
  std::optional<size_t> span_root;
  for (size_t root = start; root <= end; ++root) {
    std::set<size_t> members;
    std::vector<size_t> stack{root};
    while (!stack.empty()) {
      const size_t node = stack.back();
      stack.pop_back();
      members.insert(node);
      for (size_t child : children[node]) stack.push_back(child);
    }
    if (members.size() == length && *members.begin() == start && *members.rbegin() == end) {
      span_root = root;
    }
  }
  if (!span_root) {
    fail("span is not a full contiguous subtree");
  } else {
    if (IsSubject(sentence.deprels[*span_root])) fail("span root is a subject");
    if (length == 1 && sentence.upos[*span_root] == "PUNCT") fail("lone punctuation");
  }
  if (length == n) fail("span is the whole sentence");

  // Token split.
  for (size_t k = 0; k < length; ++k) {
    if (edit.phrase_tokens[k] != sentence.forms[start + k]) fail("phrase token mismatch");
  }
  std::vector<std::string> rest(sentence.forms.begin(), sentence.forms.begin() + start);
  rest.insert(rest.end(), sentence.forms.begin() + end + 1, sentence.forms.end());
  if (edit.base_sentence.tokens != rest) fail("shortened tokens mismatch");
  if (edit.edited_sentence.tokens != sentence.forms) fail("original tokens mismatch");

  // Byte-exact reconstruction.
  std::string original;
  std::vector<size_t> form_start(n);
  for (size_t i = 0; i < n; ++i) {
    form_start[i] = original.size();
    original += sentence.forms[i];
    if (i + 1 < n && sentence.space_after[i]) original += ' ';
  }
  if (edit.edited_sentence.text != original) fail("original text mismatch");
  const ByteSpan span = edit.byte_span;
  if (span.end > original.size() || span.start > span.end) {
    fail("byte span out of range");
    return problems;
  }
  if (original.substr(span.start, span.size()) != edit.phrase) fail("phrase bytes mismatch");
  const std::string &base = edit.base_sentence.text;
  if (span.start > base.size() ||
      base.substr(0, span.start) + edit.phrase + base.substr(span.start) != original) {
    fail("reinsertion does not reproduce the original");
  }
  // The phrase is the span's forms plus at most surrounding separators.
  const size_t core_start = form_start[start];
  const size_t core_end = form_start[end] + sentence.forms[end].size();
  if (span.start > core_start || span.end < core_end || core_start - span.start > 1 ||
      span.end - core_end > 1) {
    fail("phrase is not the span plus one separator");
  }
  for (const std::string &problem : CheckEditInvariants(edit)) fail(problem);
  return problems;
}

// --- Annotations and statistics ------------------------------------------------

std::vector<Annotation> ErrorRateFixture() {
  std::vector<Annotation> annotations;
  const std::vector<std::string> annotators = {"ann-a", "ann-b", "ann-c"};
  for (size_t r = 0; r < 100; ++r) {
    char id[16];
    std::snprintf(id, sizeof(id), "rec-%03zu", r);
    for (size_t a = 0; a < annotators.size(); ++a) {
      std::optional<size_t> judgment;
      if (r < 78) {
        judgment = (r + a) % 4;  // every annotator gives some index
      } else if (r < 91) {
        if (a != r % 3) judgment = 1;  // exactly one ERROR
        if (r % 2 == 0 && a == (r + 1) % 3) judgment.reset();  // sometimes two
      }
      annotations.push_back({id, annotators[a], judgment});
    }
  }
  std::mt19937_64 rng(78139);
  Shuffle(rng, &annotations);
  return annotations;
}

RateFixture FormerRateFixture() {
  RateFixture fixture;
  size_t next_id = 0;
  auto add = [&](const std::vector<std::string> &words, const std::string &pos, EditKind kind) {
    AtomicEdit edit;
    char id[32];
    std::snprintf(id, sizeof(id), "synthetic:%05zu", next_id++);
    edit.id = id;
    edit.kind = kind;
    edit.phrase = JoinTokens(words, " ") + " ";
    edit.phrase_tokens = words;
    std::vector<TaggedToken> tagged;
    for (const std::string &w : words) tagged.push_back({w, pos});
    fixture.tags.phrases[edit.id] = tagged;
    fixture.edits.push_back(std::move(edit));
  };
  // 1000 single-word JJ insertions: former x34, then other adjectives.
  for (int i = 0; i < 34; ++i) add({"former"}, "JJ", EditKind::kInsertion);
  for (int i = 0; i < 966; ++i) {
    add({"adj" + std::to_string(i % 37)}, "JJ", EditKind::kInsertion);
  }
  // Insertions that must not count toward the JJ denominator.
  for (int i = 0; i < 120; ++i) add({"noun" + std::to_string(i % 11)}, "NN", EditKind::kInsertion);
  for (int i = 0; i < 15; ++i) add({"former", "chief"}, "JJ", EditKind::kInsertion);
  for (int i = 0; i < 25; ++i) add({"former"}, "JJ", EditKind::kDeletion);
  fixture.tags.tagset = "ptb";

  for (int i = 0; i < 6; ++i) fixture.background.push_back({"former", "JJ"});
  for (int i = 0; i < 994; ++i) fixture.background.push_back({"adj" + std::to_string(i % 53), "JJ"});
  for (int i = 0; i < 700; ++i) fixture.background.push_back({"noun" + std::to_string(i % 11), "NN"});
  for (int i = 0; i < 300; ++i) fixture.background.push_back({"run", "VB"});
  std::mt19937_64 rng(346);
  Shuffle(rng, &fixture.edits);
  Shuffle(rng, &fixture.background);
  return fixture;
}

}  // namespace atomedit::testing

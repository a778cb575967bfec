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

#include "atomedit/atomic_edit.h"

#include <cmath>
#include <fstream>

#include "json.hpp"

namespace atomedit {

using ordered_json = nlohmann::ordered_json;

std::string_view EditKindName(EditKind kind) {
  return kind == EditKind::kInsertion ? "insertion" : "deletion";
}

std::string ToJsonLine(const AtomicEdit &edit) {
  ordered_json j;
  j["id"] = edit.id;
  j["kind"] = EditKindName(edit.kind);
  j["language"] = edit.language;
  j["article_id"] = edit.article_id;
  j["base_revision_id"] = edit.base_revision_id;
  j["edited_revision_id"] = edit.edited_revision_id;
  j["base_sentence"] = edit.base_sentence.text;
  j["base_tokens"] = edit.base_sentence.tokens;
  j["edited_sentence"] = edit.edited_sentence.text;
  j["edited_tokens"] = edit.edited_sentence.tokens;
  j["phrase"] = edit.phrase;
  j["phrase_tokens"] = edit.phrase_tokens;
  j["byte_span"] = {edit.byte_span.start, edit.byte_span.end};
  if (edit.token_index) {
    j["token_index"] = *edit.token_index;
  } else {
    j["token_index"] = nullptr;
  }
  j["token_aligned"] = edit.token_aligned;
  // Rounded so that records do not depend on the last bits of libm results.
  j["bleu"] = std::round(edit.bleu * 1e10) / 1e10;
  j["provenance"] = edit.provenance;
  if (!edit.category.empty()) j["category"] = edit.category;
  return j.dump();
}

namespace {

template <typename T>
T Field(const nlohmann::json &j, const char *key) {
  const auto it = j.find(key);
  if (it == j.end()) throw RecordFormatError(std::string("missing field: ") + key);
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception &) {
    throw RecordFormatError(std::string("bad type for field: ") + key);
  }
}

Sentence SentenceField(const nlohmann::json &j, const char *text_key,
                       const char *tokens_key) {
  const auto text = Field<std::string>(j, text_key);
  const auto tokens = Field<std::vector<std::string>>(j, tokens_key);
  Sentence sentence;
  if (!AttachTokens(text, tokens, &sentence)) {
    throw RecordFormatError(std::string(tokens_key) + " do not match " + text_key);
  }
  return sentence;
}

}  // namespace

AtomicEdit ParseEditJson(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error &e) {
    throw RecordFormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw RecordFormatError("record is not a JSON object");

  AtomicEdit edit;
  edit.id = Field<std::string>(j, "id");
  const auto kind = Field<std::string>(j, "kind");
  if (kind == "insertion") {
    edit.kind = EditKind::kInsertion;
  } else if (kind == "deletion") {
    edit.kind = EditKind::kDeletion;
  } else {
    throw RecordFormatError("unknown kind: " + kind);
  }
  edit.language = Field<std::string>(j, "language");
  edit.article_id = Field<std::string>(j, "article_id");
  edit.base_revision_id = Field<std::string>(j, "base_revision_id");
  edit.edited_revision_id = Field<std::string>(j, "edited_revision_id");
  edit.base_sentence = SentenceField(j, "base_sentence", "base_tokens");
  edit.edited_sentence = SentenceField(j, "edited_sentence", "edited_tokens");
  edit.phrase = Field<std::string>(j, "phrase");
  edit.phrase_tokens = Field<std::vector<std::string>>(j, "phrase_tokens");
  const auto span = Field<std::vector<size_t>>(j, "byte_span");
  if (span.size() != 2 || span[0] > span[1]) throw RecordFormatError("bad byte_span");
  edit.byte_span = {span[0], span[1]};
  const auto index = j.find("token_index");
  if (index != j.end() && !index->is_null()) {
    if (!index->is_number_unsigned()) throw RecordFormatError("bad token_index");
    edit.token_index = index->get<size_t>();
  }
  edit.token_aligned = Field<bool>(j, "token_aligned");
  edit.bleu = Field<double>(j, "bleu");
  edit.provenance = Field<std::string>(j, "provenance");
  if (j.contains("category") && j["category"].is_string()) {
    edit.category = j["category"].get<std::string>();
  }
  return edit;
}

std::vector<AtomicEdit> ReadEdits(std::istream &in) {
  std::vector<AtomicEdit> edits;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (NormalizeWhitespace(line).empty()) continue;
    try {
      edits.push_back(ParseEditJson(line));
    } catch (const RecordFormatError &e) {
      throw RecordFormatError("line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  return edits;
}

std::vector<AtomicEdit> ReadEditsFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return ReadEdits(in);
}

std::vector<std::string> CheckEditInvariants(const AtomicEdit &edit) {
  std::vector<std::string> problems;
  const Sentence &shorter = edit.shorter();
  const Sentence &longer = edit.longer();
  const ByteSpan span = edit.byte_span;

  if (edit.phrase.empty()) problems.push_back("empty phrase");
  if (span.size() != edit.phrase.size() || span.end > longer.text.size()) {
    problems.push_back("byte_span does not match phrase length");
  } else if (span.start > shorter.text.size()) {
    problems.push_back("byte_span starts past the shorter sentence");
  } else {
    std::string rebuilt = shorter.text.substr(0, span.start);
    rebuilt += edit.phrase;
    rebuilt += shorter.text.substr(span.start);
    if (rebuilt != longer.text) problems.push_back("byte reconstruction mismatch");
  }

  if (edit.token_aligned) {
    if (!edit.token_index) {
      problems.push_back("token_aligned without token_index");
    } else if (*edit.token_index > shorter.tokens.size()) {
      problems.push_back("token_index out of range");
    } else {
      std::vector<std::string> rebuilt(shorter.tokens.begin(),
                                       shorter.tokens.begin() + *edit.token_index);
      rebuilt.insert(rebuilt.end(), edit.phrase_tokens.begin(), edit.phrase_tokens.end());
      rebuilt.insert(rebuilt.end(), shorter.tokens.begin() + *edit.token_index,
                     shorter.tokens.end());
      if (rebuilt != longer.tokens) problems.push_back("token reconstruction mismatch");
    }
  } else if (edit.token_index) {
    problems.push_back("token_index set on a non-aligned edit");
  }
  return problems;
}

}  // namespace atomedit

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

#include "atomedit/conllu.h"

#include <charconv>

namespace atomedit {

namespace {

std::vector<std::string> SplitTabs(std::string_view line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    fields.emplace_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

bool ParseIndex(std::string_view text, size_t *value) {
  if (text.empty()) return false;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), *value);
  return ec == std::errc() && end == text.data() + text.size();
}

bool HasSpaceAfterNo(std::string_view misc) {
  size_t start = 0;
  while (start <= misc.size()) {
    size_t bar = misc.find('|', start);
    if (bar == std::string_view::npos) bar = misc.size();
    if (misc.substr(start, bar - start) == "SpaceAfter=No") return true;
    start = bar + 1;
  }
  return false;
}

}  // namespace

std::string ParsedSentence::Text() const {
  std::string text;
  for (size_t i = 0; i < forms.size(); ++i) {
    text += forms[i];
    if (i + 1 < forms.size() && space_after[i]) text += ' ';
  }
  return text;
}

std::string ValidateTree(const ParsedSentence &sentence) {
  const size_t n = sentence.size();
  if (n == 0) return "empty sentence";
  size_t roots = 0;
  for (size_t i = 0; i < n; ++i) {
    if (sentence.heads[i] > n) return "head out of range at token " + std::to_string(i + 1);
    if (sentence.heads[i] == i + 1) return "token " + std::to_string(i + 1) + " heads itself";
    if (sentence.heads[i] == 0) ++roots;
  }
  if (roots != 1) return roots == 0 ? "no root" : "multiple roots";
  // state: 0 unvisited, 1 on the current path, 2 reaches the root.
  std::vector<int> state(n, 0);
  for (size_t start = 0; start < n; ++start) {
    std::vector<size_t> path;
    size_t node = start;
    while (true) {
      if (state[node] == 2) break;
      if (state[node] == 1) return "head cycle through token " + std::to_string(node + 1);
      state[node] = 1;
      path.push_back(node);
      if (sentence.heads[node] == 0) break;
      node = sentence.heads[node] - 1;
    }
    for (size_t p : path) state[p] = 2;
  }
  return "";
}

bool ConlluReader::Next(ConlluBlock *block) {
  *block = ConlluBlock();
  ParsedSentence sentence;
  std::string error;
  bool started = false;
  std::string line;
  while (std::getline(in_, line)) {
    ++line_number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (started) break;
      continue;
    }
    if (!started) {
      started = true;
      block->first_line = line_number_;
    }
    if (line.front() == '#') {
      constexpr std::string_view kSentId = "# sent_id";
      if (line.starts_with(kSentId)) {
        const size_t eq = line.find('=');
        if (eq != std::string::npos) {
          const size_t begin = line.find_first_not_of(' ', eq + 1);
          if (begin != std::string::npos) sentence.sent_id = line.substr(begin);
        }
      }
      continue;
    }
    if (!error.empty()) continue;  // drain the rest of a bad block
    const std::vector<std::string> fields = SplitTabs(line);
    if (fields.size() != 10) {
      error = "line " + std::to_string(line_number_) + ": expected 10 columns";
      continue;
    }
    if (fields[0].find_first_of("-.") != std::string::npos) continue;
    size_t id;
    size_t head;
    if (!ParseIndex(fields[0], &id) || id != sentence.size() + 1) {
      error = "line " + std::to_string(line_number_) + ": unexpected token id " + fields[0];
      continue;
    }
    if (!ParseIndex(fields[6], &head)) {
      error = "line " + std::to_string(line_number_) + ": bad head " + fields[6];
      continue;
    }
    sentence.forms.push_back(fields[1]);
    sentence.upos.push_back(fields[3]);
    sentence.heads.push_back(head);
    sentence.deprels.push_back(fields[7]);
    sentence.space_after.push_back(!HasSpaceAfterNo(fields[9]));
  }
  if (!started) return false;

  ++block_count_;
  if (sentence.sent_id.empty()) sentence.sent_id = "s" + std::to_string(block_count_);
  block->sent_id = sentence.sent_id;
  if (error.empty()) error = ValidateTree(sentence);
  if (error.empty()) {
    block->sentence = std::move(sentence);
  } else {
    block->error = std::move(error);
  }
  return true;
}

std::vector<ConlluBlock> ReadConllu(std::istream &in) {
  ConlluReader reader(in);
  std::vector<ConlluBlock> blocks;
  ConlluBlock block;
  while (reader.Next(&block)) blocks.push_back(std::move(block));
  return blocks;
}

}  // namespace atomedit

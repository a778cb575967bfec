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

// Streaming CoNLL-U reader producing validated dependency trees.

#ifndef ATOMEDIT_CONLLU_H_
#define ATOMEDIT_CONLLU_H_

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace atomedit {

// One sentence with 0-based token positions. heads[i] is the 1-based CoNLL-U
// head of token i, 0 for the root.
struct ParsedSentence {
  std::string sent_id;
  std::vector<std::string> forms;
  std::vector<std::string> upos;
  std::vector<size_t> heads;
  std::vector<std::string> deprels;
  // False when MISC carries SpaceAfter=No.
  std::vector<bool> space_after;

  size_t size() const { return forms.size(); }
  // Surface text: forms joined by a single space unless SpaceAfter=No.
  std::string Text() const;
};

// A sentence block: either a parse or the reason it was rejected.
struct ConlluBlock {
  std::optional<ParsedSentence> sentence;
  std::string sent_id;
  std::string error;
  size_t first_line = 0;  // 1-based line of the block's first line
};

// Reads blocks one at a time. Multiword-token ranges and empty nodes are
// skipped. A block with malformed lines, out-of-range heads, no root or
// several roots, or a head cycle comes back with an error; reading continues
// with the next block. Blocks without sent_id are named "s<N>" by their
// 1-based position.
class ConlluReader {
 public:
  explicit ConlluReader(std::istream &in) : in_(in) {}

  bool Next(ConlluBlock *block);

 private:
  std::istream &in_;
  size_t line_number_ = 0;
  size_t block_count_ = 0;
};

std::vector<ConlluBlock> ReadConllu(std::istream &in);

// Validates the tree shape; returns an error message or empty.
std::string ValidateTree(const ParsedSentence &sentence);

}  // namespace atomedit

#endif  // ATOMEDIT_CONLLU_H_

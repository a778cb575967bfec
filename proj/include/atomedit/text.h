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

#ifndef ATOMEDIT_TEXT_H_
#define ATOMEDIT_TEXT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace atomedit {

using char32 = char32_t;

// Half-open byte range [start, end) into a UTF-8 string.
struct ByteSpan {
  size_t start = 0;
  size_t end = 0;

  size_t size() const { return end - start; }
  bool operator==(const ByteSpan &other) const = default;
};

// Decodes one code point starting at text[*pos] and advances *pos. Invalid
// sequences decode as U+FFFD and consume a single byte.
char32 DecodeUtf8(std::string_view text, size_t *pos);

// Appends the UTF-8 encoding of ch to out.
void AppendUtf8(char32 ch, std::string *out);

// Returns a copy of text where every invalid UTF-8 sequence is replaced by
// U+FFFD.
std::string SanitizeUtf8(std::string_view text);

// Returns true if text is well-formed UTF-8.
bool IsValidUtf8(std::string_view text);

// Returns true if pos falls on a code point boundary.
inline bool IsCodepointBoundary(std::string_view text, size_t pos) {
  return pos == 0 || pos >= text.size() ||
         (static_cast<unsigned char>(text[pos]) & 0xC0) != 0x80;
}

// Character classes used by the splitter and tokenizer.
bool IsSpace(char32 ch);
bool IsPunctuation(char32 ch);
bool IsUppercase(char32 ch);
bool IsIdeograph(char32 ch);

// Languages written without spaces between words. Text in these languages
// is tokenized one code point per token.
bool IsCodepointTokenizedLanguage(std::string_view language);

// Trims leading and trailing whitespace and collapses every internal run of
// whitespace into a single ASCII space.
std::string NormalizeWhitespace(std::string_view text);

// A tokenized sentence. Tokens are copies of the text slices named by
// byte_offsets; everything between tokens is whitespace.
struct Sentence {
  std::string text;
  std::vector<std::string> tokens;
  std::vector<ByteSpan> byte_offsets;

  size_t size() const { return tokens.size(); }
  bool operator==(const Sentence &other) const = default;
};

// Tokenizes a sentence. Space-delimited languages split on whitespace and
// isolate punctuation (a run of one repeated ASCII punctuation character,
// such as '' or ..., stays a single token). Japanese and Chinese emit one
// token per non-space code point.
Sentence Tokenize(std::string_view text, std::string_view language);

// Builds a Sentence from text and an existing token list by locating each
// token in order. Returns false if a token cannot be found or if non-space
// bytes would be left between tokens.
bool AttachTokens(std::string_view text, std::span<const std::string> tokens,
                  Sentence *out);

// Joins tokens with single spaces.
std::string JoinTokens(std::span<const std::string> tokens,
                       std::string_view separator = " ");

}  // namespace atomedit

#endif  // ATOMEDIT_TEXT_H_

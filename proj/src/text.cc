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

#include "atomedit/text.h"

namespace atomedit {

namespace {

constexpr char32 kReplacementChar = 0xFFFD;

bool InRange(char32 ch, char32 lo, char32 hi) { return ch >= lo && ch <= hi; }

}  // namespace

char32 DecodeUtf8(std::string_view text, size_t *pos) {
  const size_t start = *pos;
  const auto byte = [&](size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  const unsigned char lead = byte(start);
  if (lead < 0x80) {
    *pos = start + 1;
    return lead;
  }

  int length;
  char32 ch;
  char32 min_value;
  if ((lead & 0xE0) == 0xC0) {
    length = 2;
    ch = lead & 0x1F;
    min_value = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3;
    ch = lead & 0x0F;
    min_value = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    length = 4;
    ch = lead & 0x07;
    min_value = 0x10000;
  } else {
    *pos = start + 1;
    return kReplacementChar;
  }

  if (start + length > text.size()) {
    *pos = start + 1;
    return kReplacementChar;
  }
  for (int i = 1; i < length; ++i) {
    const unsigned char cont = byte(start + i);
    if ((cont & 0xC0) != 0x80) {
      *pos = start + 1;
      return kReplacementChar;
    }
    ch = (ch << 6) | (cont & 0x3F);
  }
  // Overlong forms, surrogates and values past U+10FFFF are invalid.
  if (ch < min_value || InRange(ch, 0xD800, 0xDFFF) || ch > 0x10FFFF) {
    *pos = start + 1;
    return kReplacementChar;
  }
  *pos = start + length;
  return ch;
}

void AppendUtf8(char32 ch, std::string *out) {
  if (ch < 0x80) {
    out->push_back(static_cast<char>(ch));
  } else if (ch < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (ch >> 6)));
    out->push_back(static_cast<char>(0x80 | (ch & 0x3F)));
  } else if (ch < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (ch >> 12)));
    out->push_back(static_cast<char>(0x80 | ((ch >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (ch & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (ch >> 18)));
    out->push_back(static_cast<char>(0x80 | ((ch >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((ch >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (ch & 0x3F)));
  }
}

std::string SanitizeUtf8(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) {
    const size_t start = pos;
    const char32 ch = DecodeUtf8(text, &pos);
    if (ch == kReplacementChar && pos - start == 1 &&
        static_cast<unsigned char>(text[start]) >= 0x80) {
      AppendUtf8(kReplacementChar, &out);
    } else {
      out.append(text.substr(start, pos - start));
    }
  }
  return out;
}

bool IsValidUtf8(std::string_view text) {
  size_t pos = 0;
  while (pos < text.size()) {
    const size_t start = pos;
    const char32 ch = DecodeUtf8(text, &pos);
    if (ch == kReplacementChar && pos - start == 1) return false;
  }
  return true;
}

bool IsSpace(char32 ch) {
  return InRange(ch, 0x09, 0x0D) || ch == 0x20 || ch == 0x85 || ch == 0xA0 ||
         ch == 0x1680 || InRange(ch, 0x2000, 0x200B) || ch == 0x2028 ||
         ch == 0x2029 || ch == 0x202F || ch == 0x205F || ch == 0x3000 ||
         ch == 0xFEFF;
}

bool IsPunctuation(char32 ch) {
  if (ch < 0x80) {
    return InRange(ch, 0x21, 0x2F) || InRange(ch, 0x3A, 0x40) ||
           InRange(ch, 0x5B, 0x60) || InRange(ch, 0x7B, 0x7E);
  }
  return InRange(ch, 0xA1, 0xBF) || ch == 0xD7 || ch == 0xF7 ||
         InRange(ch, 0x2010, 0x2027) || InRange(ch, 0x2030, 0x205E) ||
         InRange(ch, 0x3001, 0x3003) || InRange(ch, 0x3008, 0x3011) ||
         InRange(ch, 0x3014, 0x301F) || ch == 0x30FB ||
         InRange(ch, 0xFF01, 0xFF0F) || InRange(ch, 0xFF1A, 0xFF20) ||
         InRange(ch, 0xFF3B, 0xFF40) || InRange(ch, 0xFF5B, 0xFF65);
}

bool IsUppercase(char32 ch) {
  if (InRange(ch, 'A', 'Z')) return true;
  if (InRange(ch, 0xC0, 0xDE)) return ch != 0xD7;
  if (InRange(ch, 0x100, 0x17F)) return ch % 2 == 0;
  return ch == 0x386 || InRange(ch, 0x388, 0x38F) ||
         InRange(ch, 0x391, 0x3AB) || InRange(ch, 0x400, 0x42F) ||
         InRange(ch, 0x531, 0x556);
}

bool IsIdeograph(char32 ch) {
  return InRange(ch, 0x3040, 0x30FF) || InRange(ch, 0x3400, 0x4DBF) ||
         InRange(ch, 0x4E00, 0x9FFF) || InRange(ch, 0xAC00, 0xD7AF) ||
         InRange(ch, 0xF900, 0xFAFF) || InRange(ch, 0x20000, 0x2FFFF);
}

bool IsCodepointTokenizedLanguage(std::string_view language) {
  const std::string_view base = language.substr(0, language.find('-'));
  return base == "ja" || base == "zh";
}

std::string NormalizeWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  size_t pos = 0;
  while (pos < text.size()) {
    const size_t start = pos;
    const char32 ch = DecodeUtf8(text, &pos);
    if (IsSpace(ch)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.append(text.substr(start, pos - start));
  }
  return out;
}

Sentence Tokenize(std::string_view text, std::string_view language) {
  Sentence sentence;
  sentence.text = std::string(text);
  const bool per_codepoint = IsCodepointTokenizedLanguage(language);

  auto emit = [&](size_t start, size_t end) {
    sentence.tokens.emplace_back(text.substr(start, end - start));
    sentence.byte_offsets.push_back({start, end});
  };

  size_t pos = 0;
  while (pos < text.size()) {
    const size_t start = pos;
    const char32 ch = DecodeUtf8(text, &pos);
    if (IsSpace(ch)) continue;

    if (per_codepoint) {
      emit(start, pos);
      continue;
    }

    if (IsPunctuation(ch)) {
      // Runs of one repeated ASCII mark ('' or ... or --) stay together.
      if (ch < 0x80) {
        while (pos < text.size() && static_cast<char32>(text[pos]) == ch) ++pos;
      }
      emit(start, pos);
      continue;
    }

    size_t end = pos;
    while (end < text.size()) {
      size_t next = end;
      const char32 c = DecodeUtf8(text, &next);
      if (IsSpace(c) || IsPunctuation(c)) break;
      end = next;
    }
    pos = end;
    emit(start, end);
  }
  return sentence;
}

namespace {

bool OnlySpaces(std::string_view text) {
  size_t pos = 0;
  while (pos < text.size()) {
    if (!IsSpace(DecodeUtf8(text, &pos))) return false;
  }
  return true;
}

}  // namespace

bool AttachTokens(std::string_view text, std::span<const std::string> tokens,
                  Sentence *out) {
  Sentence sentence;
  sentence.text = std::string(text);
  size_t cursor = 0;
  for (const std::string &token : tokens) {
    if (token.empty()) return false;
    const size_t found = text.find(token, cursor);
    if (found == std::string_view::npos) return false;
    if (!OnlySpaces(text.substr(cursor, found - cursor))) return false;
    sentence.tokens.push_back(token);
    sentence.byte_offsets.push_back({found, found + token.size()});
    cursor = found + token.size();
  }
  if (!OnlySpaces(text.substr(cursor))) return false;
  *out = std::move(sentence);
  return true;
}

std::string JoinTokens(std::span<const std::string> tokens,
                       std::string_view separator) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.append(separator);
    out.append(tokens[i]);
  }
  return out;
}

}  // namespace atomedit

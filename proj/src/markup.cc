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

#include "atomedit/markup.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <string>
#include <utility>

#include "atomedit/text.h"

namespace atomedit {

namespace {

// Elements whose content never contributes running text.
constexpr std::array<std::string_view, 8> kDroppedElements = {
    "ref",   "math",  "gallery", "timeline",
    "score", "chem", "syntaxhighlight", "imagemap"};

// Link namespaces whose targets are media or metadata, in the languages the
// pipeline ships abbreviation lists for.
constexpr std::array<std::string_view, 18> kDroppedLinkNamespaces = {
    "file",      "image",     "category",  "media",    "datei",
    "bild",      "kategorie", "fichier",   "catégorie", "archivo",
    "imagen",    "categoría", "файл",      "категория", "ファイル",
    "カテゴリ",  "文件",      "分类"};

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool StartsWithNoCase(std::string_view text, size_t pos, std::string_view prefix) {
  if (pos + prefix.size() > text.size()) return false;
  for (size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(text[pos + i])) !=
        std::tolower(static_cast<unsigned char>(prefix[i]))) {
      return false;
    }
  }
  return true;
}

bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

std::string RemoveComments(std::string_view text) {
  std::string out;
  size_t pos = 0;
  while (pos < text.size()) {
    const size_t open = text.find("<!--", pos);
    if (open == std::string_view::npos) break;
    const size_t close = text.find("-->", open + 4);
    if (close == std::string_view::npos) break;
    out.append(text.substr(pos, open - pos));
    pos = close + 3;
  }
  out.append(text.substr(pos));
  return out;
}

// Parses an HTML-ish tag starting at text[pos] == '<'. On success stores the
// lowercase name, whether it is a closing or self-closing tag, and the
// position after '>'.
struct Tag {
  std::string name;
  bool closing = false;
  bool self_closing = false;
  size_t end = 0;
};

bool ParseTag(std::string_view text, size_t pos, Tag *tag) {
  size_t i = pos + 1;
  tag->closing = false;
  if (i < text.size() && text[i] == '/') {
    tag->closing = true;
    ++i;
  }
  const size_t name_start = i;
  if (i >= text.size() || !IsAsciiAlpha(text[i])) return false;
  while (i < text.size() &&
         (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '-')) {
    ++i;
  }
  tag->name = Lower(text.substr(name_start, i - name_start));
  if (i < text.size() && text[i] != '>' && text[i] != '/' &&
      !std::isspace(static_cast<unsigned char>(text[i]))) {
    return false;
  }
  const size_t close = text.find('>', i);
  if (close == std::string_view::npos) return false;
  // A '<' before the '>' means this was not a tag after all.
  if (text.find('<', i) < close) return false;
  tag->self_closing = close > pos && text[close - 1] == '/';
  tag->end = close + 1;
  return true;
}

bool IsDroppedElement(std::string_view name) {
  return std::find(kDroppedElements.begin(), kDroppedElements.end(), name) !=
         kDroppedElements.end();
}

std::string RemoveDroppedElements(std::string_view text) {
  std::string out;
  size_t pos = 0;
  size_t copied = 0;
  while ((pos = text.find('<', pos)) != std::string_view::npos) {
    Tag tag;
    if (!ParseTag(text, pos, &tag) || tag.closing || !IsDroppedElement(tag.name)) {
      ++pos;
      continue;
    }
    size_t end = tag.end;
    if (!tag.self_closing) {
      // Find the matching close tag; a missing one leaves the content.
      const std::string close_tag = "</" + tag.name;
      size_t search = tag.end;
      while (search < text.size()) {
        const size_t found = text.find("</", search);
        if (found == std::string_view::npos) break;
        Tag candidate;
        if (StartsWithNoCase(text, found, close_tag) &&
            ParseTag(text, found, &candidate) && candidate.name == tag.name) {
          end = candidate.end;
          break;
        }
        search = found + 2;
      }
    }
    out.append(text.substr(copied, pos - copied));
    copied = pos = end;
  }
  out.append(text.substr(copied));
  return out;
}

// Removes balanced open...close regions, honoring nesting. Unbalanced
// openers stay as literal text.
std::string RemoveBalanced(std::string_view text, std::string_view open,
                           std::string_view close) {
  std::string out;
  size_t pos = 0;
  size_t copied = 0;
  while ((pos = text.find(open, pos)) != std::string_view::npos) {
    int depth = 0;
    size_t i = pos;
    size_t end = std::string_view::npos;
    while (i < text.size()) {
      if (text.compare(i, open.size(), open) == 0) {
        ++depth;
        i += open.size();
      } else if (text.compare(i, close.size(), close) == 0) {
        --depth;
        i += close.size();
        if (depth == 0) {
          end = i;
          break;
        }
      } else {
        ++i;
      }
    }
    if (end == std::string_view::npos) {
      pos += open.size();
      continue;
    }
    out.append(text.substr(copied, pos - copied));
    copied = pos = end;
  }
  out.append(text.substr(copied));
  return out;
}

// Returns the end of the "]]" matching the "[[" at pos, or npos.
size_t MatchLink(std::string_view text, size_t pos) {
  int depth = 0;
  size_t i = pos;
  while (i + 1 < text.size()) {
    if (text[i] == '[' && text[i + 1] == '[') {
      ++depth;
      i += 2;
    } else if (text[i] == ']' && text[i + 1] == ']') {
      --depth;
      i += 2;
      if (depth == 0) return i;
    } else if (text[i] == '\n' && depth == 1) {
      // Plain links never span lines; file captions may.
      const std::string_view inner = text.substr(pos + 2, i - pos - 2);
      if (inner.find(':') == std::string_view::npos) return std::string_view::npos;
      ++i;
    } else {
      ++i;
    }
  }
  return std::string_view::npos;
}

// Lowercase language codes such as "fr", "de" or "zh-yue".
bool IsInterlanguagePrefix(std::string_view prefix) {
  const std::string_view code = prefix.substr(0, prefix.find('-'));
  if (code.size() < 2 || code.size() > 3 || prefix.back() == '-') return false;
  for (char c : prefix) {
    if (!((c >= 'a' && c <= 'z') || c == '-')) return false;
  }
  return true;
}

std::string ResolveLinks(std::string_view text);

std::string RenderLink(std::string_view inner) {
  const size_t pipe = inner.find('|');
  std::string_view target = inner.substr(0, pipe);
  const bool leading_colon = !target.empty() && target.front() == ':';
  if (leading_colon) target.remove_prefix(1);

  const size_t colon = target.find(':');
  if (colon != std::string_view::npos && !leading_colon) {
    const std::string prefix = Lower(NormalizeWhitespace(target.substr(0, colon)));
    if (std::find(kDroppedLinkNamespaces.begin(), kDroppedLinkNamespaces.end(),
                  prefix) != kDroppedLinkNamespaces.end()) {
      return "";
    }
    if (pipe == std::string_view::npos &&
        IsInterlanguagePrefix(target.substr(0, colon))) {
      return "";
    }
  }

  if (pipe != std::string_view::npos) {
    const std::string label = ResolveLinks(inner.substr(pipe + 1));
    if (!NormalizeWhitespace(label).empty()) return label;
  }
  return std::string(target);
}

std::string ResolveLinks(std::string_view text) {
  std::string out;
  size_t pos = 0;
  size_t copied = 0;
  while ((pos = text.find("[[", pos)) != std::string_view::npos) {
    const size_t end = MatchLink(text, pos);
    if (end == std::string_view::npos) {
      pos += 2;
      continue;
    }
    out.append(text.substr(copied, pos - copied));
    out.append(RenderLink(text.substr(pos + 2, end - pos - 4)));
    copied = pos = end;
  }
  out.append(text.substr(copied));
  return out;
}

bool IsUrlStart(std::string_view text, size_t pos) {
  for (std::string_view scheme : {"http://", "https://", "ftp://", "//", "mailto:"}) {
    if (StartsWithNoCase(text, pos, scheme)) return true;
  }
  return false;
}

std::string ResolveExternalLinks(std::string_view text) {
  std::string out;
  size_t pos = 0;
  size_t copied = 0;
  while ((pos = text.find('[', pos)) != std::string_view::npos) {
    if (!IsUrlStart(text, pos + 1)) {
      ++pos;
      continue;
    }
    const size_t close = text.find(']', pos);
    const size_t newline = text.find('\n', pos);
    if (close == std::string_view::npos || newline < close) {
      ++pos;
      continue;
    }
    const std::string_view inner = text.substr(pos + 1, close - pos - 1);
    const size_t space = inner.find(' ');
    out.append(text.substr(copied, pos - copied));
    if (space != std::string_view::npos) out.append(inner.substr(space + 1));
    copied = pos = close + 1;
  }
  out.append(text.substr(copied));
  return out;
}

std::string RemoveTags(std::string_view text) {
  std::string out;
  size_t pos = 0;
  size_t copied = 0;
  while ((pos = text.find('<', pos)) != std::string_view::npos) {
    Tag tag;
    if (!ParseTag(text, pos, &tag)) {
      ++pos;
      continue;
    }
    out.append(text.substr(copied, pos - copied));
    if (tag.name == "br" || tag.name == "p" || tag.name == "div") out.push_back(' ');
    copied = pos = tag.end;
  }
  out.append(text.substr(copied));
  return out;
}

// '' italic, ''' bold, ''''' both; '''' renders as a literal apostrophe
// followed by bold.
std::string RemoveEmphasis(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '\'') {
      out.push_back(text[i++]);
      continue;
    }
    size_t run = 0;
    while (i + run < text.size() && text[i + run] == '\'') ++run;
    i += run;
    if (run == 1) {
      out.push_back('\'');
    } else if (run == 4) {
      out.push_back('\'');
    } else if (run > 5) {
      out.append(run - 5, '\'');
    }
  }
  return out;
}

std::string RemoveMagicWords(std::string_view text) {
  std::string out;
  size_t pos = 0;
  size_t copied = 0;
  while ((pos = text.find("__", pos)) != std::string_view::npos) {
    size_t i = pos + 2;
    while (i < text.size() && text[i] >= 'A' && text[i] <= 'Z') ++i;
    if (i > pos + 2 && text.compare(i, 2, "__") == 0) {
      out.append(text.substr(copied, pos - copied));
      copied = pos = i + 2;
    } else {
      pos += 2;
    }
  }
  out.append(text.substr(copied));
  return out;
}

struct NamedEntity {
  std::string_view name;
  char32 value;
};

constexpr std::array<NamedEntity, 16> kNamedEntities = {{
    {"amp", '&'},      {"lt", '<'},       {"gt", '>'},
    {"quot", '"'},     {"apos", '\''},    {"nbsp", 0xA0},
    {"ndash", 0x2013}, {"mdash", 0x2014}, {"minus", 0x2212},
    {"hellip", 0x2026}, {"laquo", 0xAB},  {"raquo", 0xBB},
    {"lsquo", 0x2018}, {"rsquo", 0x2019}, {"ldquo", 0x201C},
    {"rdquo", 0x201D},
}};

bool ParseEntity(std::string_view text, size_t pos, char32 *value, size_t *end) {
  const size_t semi = text.find(';', pos);
  if (semi == std::string_view::npos || semi - pos > 12 || semi == pos + 1) {
    return false;
  }
  const std::string_view body = text.substr(pos + 1, semi - pos - 1);
  if (body.front() == '#') {
    uint32_t code = 0;
    const bool hex = body.size() > 1 && (body[1] == 'x' || body[1] == 'X');
    const std::string_view digits = body.substr(hex ? 2 : 1);
    if (digits.empty() || digits.size() > 7) return false;
    for (char c : digits) {
      int d;
      if (c >= '0' && c <= '9') {
        d = c - '0';
      } else if (hex && c >= 'a' && c <= 'f') {
        d = c - 'a' + 10;
      } else if (hex && c >= 'A' && c <= 'F') {
        d = c - 'A' + 10;
      } else {
        return false;
      }
      code = code * (hex ? 16 : 10) + d;
    }
    // Control characters, surrogates and out-of-range values stay literal.
    if (code < 0x20 || (code >= 0xD800 && code <= 0xDFFF) || code > 0x10FFFF) {
      return false;
    }
    *value = code;
    *end = semi + 1;
    return true;
  }
  for (const NamedEntity &entity : kNamedEntities) {
    if (entity.name == body) {
      *value = entity.value;
      *end = semi + 1;
      return true;
    }
  }
  return false;
}

std::string DecodeEntities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t pos = 0;
  size_t copied = 0;
  while ((pos = text.find('&', pos)) != std::string_view::npos) {
    char32 value;
    size_t end;
    if (!ParseEntity(text, pos, &value, &end)) {
      ++pos;
      continue;
    }
    out.append(text.substr(copied, pos - copied));
    AppendUtf8(value, &out);
    copied = pos = end;
  }
  out.append(text.substr(copied));
  return out;
}

bool IsHeading(std::string_view line) {
  return line.size() >= 2 && line.front() == '=' && line.back() == '=';
}

std::string CleanLines(std::string_view text) {
  std::string out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t newline = text.find('\n', pos);
    if (newline == std::string_view::npos) newline = text.size();
    std::string line = NormalizeWhitespace(text.substr(pos, newline - pos));
    pos = newline + 1;

    if (IsHeading(line) || line.starts_with("----")) continue;
    const size_t body = line.find_first_not_of("*#:;");
    if (body == std::string::npos) continue;
    if (body > 0) line = NormalizeWhitespace(std::string_view(line).substr(body));
    if (line.empty()) continue;

    if (!out.empty()) out.push_back('\n');
    out.append(line);
  }
  return out;
}

std::string StripOnce(std::string_view body) {
  std::string text = RemoveComments(body);
  text = RemoveDroppedElements(text);
  text = RemoveBalanced(text, "{{", "}}");
  text = RemoveBalanced(text, "{|", "|}");
  text = ResolveLinks(text);
  text = ResolveExternalLinks(text);
  text = RemoveTags(text);
  text = RemoveEmphasis(text);
  text = RemoveMagicWords(text);
  text = DecodeEntities(text);
  return CleanLines(text);
}

}  // namespace

std::string StripMarkup(std::string_view body) {
  // Every pass after the first either shrinks the text or leaves it
  // unchanged, so iterating to a fixed point terminates.
  std::string current = StripOnce(SanitizeUtf8(body));
  for (;;) {
    std::string next = StripOnce(current);
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace atomedit

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

#include "atomedit/splitter.h"

#include <fstream>
#include <initializer_list>
#include <stdexcept>

#include "atomedit/text.h"

namespace atomedit {

namespace {

constexpr std::string_view kBuiltinVersion = "builtin-1";

const std::initializer_list<std::string_view> kEnglish = {
    "Mr.",   "Mrs.",  "Ms.",   "Dr.",   "Prof.", "Sr.",   "Jr.",   "St.",
    "Mt.",   "Ft.",   "Gen.",  "Col.",  "Lt.",   "Capt.", "Sgt.",  "Maj.",
    "Adm.",  "Gov.",  "Sen.",  "Rep.",  "Rev.",  "Hon.",  "Pres.", "vs.",
    "etc.",  "e.g.",  "i.e.",  "cf.",   "al.",   "ca.",   "approx.", "Inc.",
    "Ltd.",  "Co.",   "Corp.", "Bros.", "No.",   "Nos.",  "Vol.",  "Fig.",
    "pp.",   "p.",    "Jan.",  "Feb.",  "Mar.",  "Apr.",  "Jun.",  "Jul.",
    "Aug.",  "Sep.",  "Sept.", "Oct.",  "Nov.",  "Dec.",  "U.S.",  "U.K.",
    "U.N.",  "D.C.",  "Ph.D.", "B.A.",  "M.A.",  "Ave.",  "Blvd.", "Rd.",
    "Dept.", "Univ.", "est.",  "b.",    "d.",    "c.",    "op.",   "ed.",
    "eds.",  "trans.", "viz."};

const std::initializer_list<std::string_view> kGerman = {
    "Dr.",   "Prof.", "Hr.",   "Fr.",   "bzw.",  "ca.",   "d.h.",  "etc.",
    "evtl.", "ggf.",  "inkl.", "Nr.",   "S.",    "sog.",  "u.a.",  "usw.",
    "vgl.",  "z.B.",  "z.T.",  "Jh.",   "geb.",  "gest.", "St.",   "Str.",
    "Bd.",   "Abb.",  "Aufl.", "Hrsg.", "Jan.",  "Feb.",  "Okt.",  "Nov.",
    "Dez.",  "v.",    "o.",    "Mio.",  "Mrd."};

const std::initializer_list<std::string_view> kSpanish = {
    "Sr.",   "Sra.",  "Srta.", "Dr.",   "Dra.",  "Prof.", "Ud.",   "Uds.",
    "etc.",  "p.",    "pp.",   "núm.",  "N.º",   "Av.",   "Sto.",  "Sta.",
    "Gral.", "Cía.",  "S.A.",  "aprox.", "ej.",  "EE.UU.", "vol.", "cap.",
    "ca.",   "D.",    "Dña."};

const std::initializer_list<std::string_view> kFrench = {
    "M.",    "MM.",   "Mme.",  "Mlle.", "Dr.",   "Pr.",   "St.",   "Ste.",
    "etc.",  "cf.",   "p.",    "pp.",   "av.",   "apr.",  "J.-C.", "env.",
    "vol.",  "no.",   "bd.",   "ch.",   "éd.",   "Cie."};

const std::initializer_list<std::string_view> kItalian = {
    "Sig.",  "Sig.ra", "Dott.", "Prof.", "Avv.", "Ing.",  "ecc.",  "pag.",
    "pp.",   "S.",     "Mons.", "ca.",   "vol.", "cfr.",  "a.C.",  "d.C."};

const std::initializer_list<std::string_view> kRussian = {
    "г.",    "гг.",   "т.",    "д.",    "т.е.",  "т.д.",  "т.п.",  "др.",
    "пр.",   "см.",   "ул.",   "им.",   "стр.",  "тыс.",  "млн.",  "млрд.",
    "в.",    "вв.",   "н.э."};

std::initializer_list<std::string_view> BuiltinList(std::string_view language) {
  const std::string_view base = language.substr(0, language.find('-'));
  if (base == "en") return kEnglish;
  if (base == "de") return kGerman;
  if (base == "es") return kSpanish;
  if (base == "fr") return kFrench;
  if (base == "it") return kItalian;
  if (base == "ru") return kRussian;
  return {};
}

bool IsAsciiTerminal(char32 ch) { return ch == '.' || ch == '!' || ch == '?'; }

bool IsWideTerminal(char32 ch) {
  return ch == 0x3002 || ch == 0xFF01 || ch == 0xFF1F;
}

bool IsClosing(char32 ch) {
  return ch == '"' || ch == '\'' || ch == ')' || ch == ']' || ch == 0x201D ||
         ch == 0x2019 || ch == 0xBB || ch == 0x300D || ch == 0x300F ||
         ch == 0xFF09;
}

bool IsOpening(char32 ch) {
  return ch == '"' || ch == '\'' || ch == '(' || ch == '[' || ch == 0x201C ||
         ch == 0x2018 || ch == 0xAB || ch == 0x300C || ch == 0x300E ||
         ch == 0xFF08;
}

void EmitTrimmed(std::string_view text, std::vector<std::string> *out) {
  // Only the ends are trimmed so a sentence stays a slice of its line.
  size_t begin = 0;
  size_t end = text.size();
  while (begin < end) {
    size_t next = begin;
    if (!IsSpace(DecodeUtf8(text, &next))) break;
    begin = next;
  }
  while (end > begin) {
    size_t start = end - 1;
    while (start > begin && !IsCodepointBoundary(text, start)) --start;
    size_t probe = start;
    if (!IsSpace(DecodeUtf8(text, &probe))) break;
    end = start;
  }
  if (begin < end) out->emplace_back(text.substr(begin, end - begin));
}

}  // namespace

SentenceSplitter::SentenceSplitter(std::string_view language)
    : version_(kBuiltinVersion) {
  for (std::string_view entry : BuiltinList(language)) {
    abbreviations_.emplace(entry);
  }
}

SentenceSplitter SentenceSplitter::FromFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read abbreviation list: " + path);
  SentenceSplitter splitter;
  splitter.version_ = "file:" + path;
  std::string line;
  while (std::getline(in, line)) {
    const std::string entry = NormalizeWhitespace(line);
    if (entry.empty()) continue;
    if (entry.front() == '#') {
      constexpr std::string_view kVersionTag = "# version:";
      if (entry.starts_with(kVersionTag)) {
        splitter.version_ = NormalizeWhitespace(entry.substr(kVersionTag.size()));
      }
      continue;
    }
    splitter.abbreviations_.insert(entry);
  }
  return splitter;
}

std::vector<std::string> SentenceSplitter::Split(std::string_view text) const {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t newline = text.find('\n', pos);
    if (newline == std::string_view::npos) newline = text.size();
    SplitLine(text.substr(pos, newline - pos), &out);
    pos = newline + 1;
  }
  return out;
}

void SentenceSplitter::SplitLine(std::string_view line,
                                 std::vector<std::string> *out) const {
  size_t sentence_start = 0;
  size_t pos = 0;
  while (pos < line.size()) {
    const size_t mark = pos;
    const char32 ch = DecodeUtf8(line, &pos);
    const bool wide = IsWideTerminal(ch);
    if (!wide && !IsAsciiTerminal(ch)) continue;

    // Absorb further terminals ("?!", "...") and closing quotes/brackets.
    size_t end = pos;
    bool single_period = ch == '.';
    while (end < line.size()) {
      size_t next = end;
      const char32 c = DecodeUtf8(line, &next);
      if (IsAsciiTerminal(c) || IsWideTerminal(c)) {
        single_period = false;
      } else if (!IsClosing(c)) {
        break;
      }
      end = next;
    }

    // Look at what follows.
    size_t probe = end;
    bool saw_space = false;
    char32 next_char = 0;
    while (probe < line.size()) {
      next_char = DecodeUtf8(line, &probe);
      if (IsSpace(next_char)) {
        saw_space = true;
        continue;
      }
      if (!IsOpening(next_char)) break;
    }
    pos = end;
    if (probe >= line.size() && (next_char == 0 || IsSpace(next_char))) {
      continue;  // End of line closes the sentence anyway.
    }

    bool boundary;
    if (wide) {
      boundary = true;
    } else {
      boundary = saw_space && (IsUppercase(next_char) || IsIdeograph(next_char));
    }
    if (boundary && single_period) {
      size_t word_start = mark;
      while (word_start > sentence_start) {
        size_t prev = word_start - 1;
        while (prev > sentence_start && !IsCodepointBoundary(line, prev)) --prev;
        size_t probe_prev = prev;
        if (IsSpace(DecodeUtf8(line, &probe_prev))) break;
        word_start = prev;
      }
      // Drop opening quotes/brackets glued to the word.
      while (word_start < mark) {
        size_t next = word_start;
        if (!IsOpening(DecodeUtf8(line, &next))) break;
        word_start = next;
      }
      const std::string_view word = line.substr(word_start, mark + 1 - word_start);
      size_t first = word_start;
      const char32 initial = first < mark ? DecodeUtf8(line, &first) : 0;
      const bool is_initial = first == mark && IsUppercase(initial);
      if (is_initial || IsAbbreviation(word)) boundary = false;
    }
    if (!boundary) continue;

    EmitTrimmed(line.substr(sentence_start, end - sentence_start), out);
    sentence_start = end;
  }
  EmitTrimmed(line.substr(sentence_start), out);
}

}  // namespace atomedit

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

#include "atomedit/config_file.h"

#include <charconv>
#include <fstream>

namespace atomedit {

namespace {

std::string_view Trim(std::string_view s) {
  const size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

bool IsBareKey(std::string_view key) {
  if (key.empty()) return false;
  for (char c : key) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

// Parses a basic string starting at text[0] == '"'; returns the index after
// the closing quote.
size_t ParseString(std::string_view text, std::string *out, const std::string &where) {
  out->clear();
  for (size_t i = 1; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '"') return i + 1;
    if (c != '\\') {
      out->push_back(c);
      continue;
    }
    if (++i == text.size()) break;
    switch (text[i]) {
      case '"': out->push_back('"'); break;
      case '\\': out->push_back('\\'); break;
      case 'n': out->push_back('\n'); break;
      case 't': out->push_back('\t'); break;
      default: throw ConfigError(where + "unsupported escape in string");
    }
  }
  throw ConfigError(where + "unterminated string");
}

ConfigValue ParseValue(std::string_view text, const std::string &where) {
  if (text.empty()) throw ConfigError(where + "missing value");
  if (text.front() == '"') {
    std::string value;
    const size_t end = ParseString(text, &value, where);
    const std::string_view rest = Trim(text.substr(end));
    if (!rest.empty() && rest.front() != '#') throw ConfigError(where + "text after value");
    return value;
  }
  const std::string_view bare = Trim(text.substr(0, text.find('#')));
  if (bare == "true") return true;
  if (bare == "false") return false;
  std::string digits;
  for (char c : bare) {
    if (c != '_') digits.push_back(c);
  }
  const char *begin = digits.data();
  const char *end = begin + digits.size();
  if (!digits.empty() && digits.front() == '+') ++begin;
  int64_t integer;
  auto [ptr, ec] = std::from_chars(begin, end, integer);
  if (ec == std::errc() && ptr == end) return integer;
  double real;
  auto [rptr, rec] = std::from_chars(begin, end, real);
  if (rec == std::errc() && rptr == end) return real;
  throw ConfigError(where + "unsupported value '" + std::string(bare) + "'");
}

}  // namespace

std::map<std::string, ConfigValue> ParseConfig(std::istream &in) {
  std::map<std::string, ConfigValue> values;
  std::string table;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string where = "config line " + std::to_string(line_number) + ": ";
    const std::string_view text = Trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (text.front() == '[') {
      const size_t close = text.find(']');
      if (close == std::string_view::npos) throw ConfigError(where + "unterminated table header");
      const std::string_view name = Trim(text.substr(1, close - 1));
      const std::string_view rest = Trim(text.substr(close + 1));
      if (!IsBareKey(name) || (!rest.empty() && rest.front() != '#')) {
        throw ConfigError(where + "bad table header");
      }
      table = std::string(name);
      continue;
    }
    const size_t eq = text.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where + "expected key = value");
    const std::string_view key = Trim(text.substr(0, eq));
    if (!IsBareKey(key)) throw ConfigError(where + "bad key '" + std::string(key) + "'");
    const std::string full = table.empty() ? std::string(key) : table + "." + std::string(key);
    if (!values.emplace(full, ParseValue(Trim(text.substr(eq + 1)), where)).second) {
      throw ConfigError(where + "duplicate key '" + full + "'");
    }
  }
  return values;
}

std::map<std::string, ConfigValue> ParseConfigFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path);
  return ParseConfig(in);
}

std::string ConfigString(const ConfigValue &value, const std::string &key) {
  if (const auto *s = std::get_if<std::string>(&value)) return *s;
  throw ConfigError("config key " + key + " must be a string");
}

int64_t ConfigInt(const ConfigValue &value, const std::string &key) {
  if (const auto *i = std::get_if<int64_t>(&value)) return *i;
  throw ConfigError("config key " + key + " must be an integer");
}

double ConfigDouble(const ConfigValue &value, const std::string &key) {
  if (const auto *d = std::get_if<double>(&value)) return *d;
  if (const auto *i = std::get_if<int64_t>(&value)) return static_cast<double>(*i);
  throw ConfigError("config key " + key + " must be a number");
}

bool ConfigBool(const ConfigValue &value, const std::string &key) {
  if (const auto *b = std::get_if<bool>(&value)) return *b;
  throw ConfigError("config key " + key + " must be true or false");
}

}  // namespace atomedit

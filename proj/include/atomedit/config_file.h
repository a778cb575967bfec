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

// A small TOML subset for run configuration: "[table]" headers, and
// "key = value" pairs whose values are basic strings, integers, floats or
// booleans, with "#" comments. Keys under a table are named "table.key".

#ifndef ATOMEDIT_CONFIG_FILE_H_
#define ATOMEDIT_CONFIG_FILE_H_

#include <cstdint>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>

namespace atomedit {

using ConfigValue = std::variant<std::string, int64_t, double, bool>;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws ConfigError naming the line for syntax errors and duplicate keys.
std::map<std::string, ConfigValue> ParseConfig(std::istream &in);
std::map<std::string, ConfigValue> ParseConfigFile(const std::string &path);

// Typed accessors; throw ConfigError when the value has another type.
// Integers are accepted where a double is expected.
std::string ConfigString(const ConfigValue &value, const std::string &key);
int64_t ConfigInt(const ConfigValue &value, const std::string &key);
double ConfigDouble(const ConfigValue &value, const std::string &key);
bool ConfigBool(const ConfigValue &value, const std::string &key);

}  // namespace atomedit

#endif  // ATOMEDIT_CONFIG_FILE_H_

/* Copyright 2026 The czgrape Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace czgrape {

// Flat key/value config reader for the TOML subset used by the bundled
// presets: [section] headers, key = value lines, '#' comments, scalar
// values only (number, bool, quoted string). Keys are stored fully
// qualified as "section.key"; keys before any header have no prefix.
class Config {
 public:
  static Config parse(const std::string& text);
  static Config load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key) const;
  int get_int(const std::string& key, int fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;

  void set(const std::string& key, const std::string& raw) { values_[key] = raw; }

  const std::map<std::string, std::string>& raw() const { return values_; }

  // Directory of the file this config was loaded from; used to resolve
  // relative paths referenced inside it.
  const std::string& base_dir() const { return base_dir_; }

 private:
  std::map<std::string, std::string> values_;
  std::string base_dir_ = ".";
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string resolve_path(const Config& cfg, const std::string& path);

}  // namespace czgrape

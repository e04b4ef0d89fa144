// Copyright 2026 The qkc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <string>

#include "qkc/errors.hpp"
#include "qkc/serialize.hpp"

namespace qkc {

enum class OutputFormat { kJson, kCsv };

/// Effective settings of one CLI invocation. Sources, lowest precedence
/// first: built-in defaults, config file, QKC_CACHE_DIR, command-line flags.
struct Config {
  std::string cache_dir = ".qkc-cache";
  std::size_t max_len = 12;
  std::uint32_t n = 2;
  double alpha = 0.05;
  double epsilon = 0.25;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::kJson;
  int verbosity = 0;
};

namespace detail {

// Whole-string parse; rejects signs, trailing junk and out-of-range values.
template <class T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || value.empty()) throw UsageError("bad value for '" + key + "': " + value);
  return out;
}

inline double parse_real(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(value, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw UsageError("bad value for '" + key + "': " + value);
  return v;
}

}  // namespace detail

inline void apply_setting(Config& cfg, const std::string& key, const std::string& value) {
  if (key == "cache_dir") cfg.cache_dir = value;
  else if (key == "max_len") cfg.max_len = detail::parse_number<std::size_t>(key, value);
  else if (key == "n") cfg.n = detail::parse_number<std::uint32_t>(key, value);
  else if (key == "alpha") cfg.alpha = detail::parse_real(key, value);
  else if (key == "epsilon") cfg.epsilon = detail::parse_real(key, value);
  else if (key == "seed") cfg.seed = detail::parse_number<std::uint64_t>(key, value);
  else if (key == "format") {
    if (value == "json") cfg.format = OutputFormat::kJson;
    else if (value == "csv") cfg.format = OutputFormat::kCsv;
    else throw UsageError("format must be json or csv");
  } else if (key == "verbosity") cfg.verbosity = detail::parse_number<int>(key, value);
  else throw UsageError("unknown config key '" + key + "'");
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

/// `key = value` lines; '#' starts a comment.
inline void load_config_file(Config& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

inline void apply_environment(Config& cfg) {
  if (const char* dir = std::getenv("QKC_CACHE_DIR"); dir && *dir) cfg.cache_dir = dir;
}

inline Json config_to_json(const Config& c) {
  return Json{{"cache_dir", c.cache_dir},
              {"max_len", c.max_len},
              {"n", c.n},
              {"alpha", c.alpha},
              {"epsilon", c.epsilon},
              {"seed", c.seed},
              {"format", c.format == OutputFormat::kJson ? "json" : "csv"},
              {"verbosity", c.verbosity}};
}

}  // namespace qkc

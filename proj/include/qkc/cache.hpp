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

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "qkc/dovetail.hpp"
#include "qkc/enumerate.hpp"
#include "qkc/serialize.hpp"

namespace qkc {

/// Halted outputs of every decodable program up to max_len on n qubits
/// (no conditional), sorted by enumeration order.
struct OutputTable {
  std::uint32_t n = 0;
  std::size_t max_len = 0;
  std::vector<RunResult> entries;
};

struct CacheLoad {
  OutputTable table;
  std::uint64_t simulations = 0;  // programs simulated by this call
  bool hit = false;
  std::vector<std::string> warnings;
};

inline OutputTable compute_outputs(std::uint32_t n, std::size_t max_len) {
  OutputTable t{n, max_len, {}};
  Dovetailer dt(ProgramEnumerator(max_len, n), n);
  while (auto r = dt.next()) t.entries.push_back(std::move(*r));
  std::sort(t.entries.begin(), t.entries.end(),
            [](const RunResult& a, const RunResult& b) { return a.sequence < b.sequence; });
  return t;
}

inline std::filesystem::path cache_file(const std::filesystem::path& dir, std::uint32_t n, std::size_t max_len) {
  return dir / ("outputs-" + std::string(kEncodingVersion) + "-n" + std::to_string(n) + "-L" +
                std::to_string(max_len) + ".jsonl");
}

namespace detail {

inline Json cache_record(const RunResult& r) {
  return Json{{"program", program_to_json(r.program)}, {"output", state_to_json(*r.output)}, {"steps", r.steps}};
}

inline std::optional<OutputTable> read_cache(const std::filesystem::path& file, std::uint32_t n, std::size_t max_len,
                                             std::string& why) {
  std::ifstream in(file);
  if (!in) {
    why = "missing";
    return std::nullopt;
  }
  try {
    std::string line;
    if (!std::getline(in, line)) throw UsageError("empty cache file");
    const Json header = Json::parse(line);
    if (header.at("version").get<std::string>() != kEncodingVersion) {
      why = "encoding version mismatch";
      return std::nullopt;
    }
    if (header.at("n").get<std::uint32_t>() != n || header.at("max_len").get<std::size_t>() != max_len)
      throw UsageError("cache key mismatch");
    const auto count = header.at("count").get<std::size_t>();
    OutputTable t{n, max_len, {}};
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      Json rec = Json::parse(line);
      const std::string hash = rec.at("hash").get<std::string>();
      rec.erase("hash");
      if (content_hash(rec.dump()) != hash) throw UsageError("entry hash mismatch");
      RunResult r;
      r.program = program_from_json(rec.at("program"));
      r.output = state_from_json(rec.at("output"));
      r.steps = rec.at("steps").get<std::uint64_t>();
      r.status = RunStatus::kHalted;
      r.sequence = t.entries.size();
      t.entries.push_back(std::move(r));
    }
    if (t.entries.size() != count) throw UsageError("entry count mismatch");
    return t;
  } catch (const std::exception& e) {
    why = std::string("corrupt cache: ") + e.what();
    return std::nullopt;
  }
}

inline void write_cache(const std::filesystem::path& file, const OutputTable& t) {
  std::filesystem::create_directories(file.parent_path());
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw UsageError("cannot write cache file " + tmp);
    out << Json{{"version", kEncodingVersion}, {"n", t.n}, {"max_len", t.max_len}, {"count", t.entries.size()}}.dump()
        << '\n';
    for (const auto& r : t.entries) {
      Json rec = cache_record(r);
      const std::string hash = content_hash(rec.dump());
      rec["hash"] = hash;
      out << rec.dump() << '\n';
    }
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace detail

/// Returns the output table for (n, max_len), reading it from cache_dir when a
/// valid file exists and otherwise computing and persisting it. A corrupt or
/// stale file is recomputed and overwritten, with a warning.
inline CacheLoad cached_outputs(std::uint32_t n, std::size_t max_len, const std::filesystem::path& cache_dir) {
  CacheLoad load;
  const auto file = cache_file(cache_dir, n, max_len);
  std::string why;
  if (auto t = detail::read_cache(file, n, max_len, why)) {
    load.table = std::move(*t);
    load.hit = true;
    return load;
  }
  if (why != "missing") load.warnings.push_back(file.string() + ": " + why + "; recomputing");
  load.table = compute_outputs(n, max_len);
  load.table.entries.shrink_to_fit();
  load.simulations = load.table.entries.size();
  detail::write_cache(file, load.table);
  return load;
}

}  // namespace qkc

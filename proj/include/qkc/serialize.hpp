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

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qkc/errors.hpp"
#include "qkc/program.hpp"
#include "qkc/state_vector.hpp"

namespace qkc {

using Json = nlohmann::ordered_json;

// Bumped whenever any emitted record layout changes.
inline constexpr int kSchemaVersion = 1;

inline std::string to_string(const Rational& q) { return q.get_str(10); }

/// {"n": int, "amps": [[re_num, re_den, im_num, im_den], ...]}, integers as
/// decimal strings, amplitude index with qubit 0 most significant.
inline Json state_to_json(const StateVector& s) {
  Json amps = Json::array();
  for (const auto& a : s.amplitudes()) {
    amps.push_back({a.re().get_num().get_str(10), a.re().get_den().get_str(10), a.im().get_num().get_str(10),
                    a.im().get_den().get_str(10)});
  }
  return Json{{"n", s.n_qubits()}, {"amps", std::move(amps)}};
}

inline StateVector state_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::uint32_t>();
    std::vector<GaussianRational> amps;
    for (const auto& a : j.at("amps")) {
      if (!a.is_array() || a.size() != 4) throw UsageError("amplitude entries must have 4 components");
      amps.emplace_back(make_rational(a[0].get<std::string>(), a[1].get<std::string>()),
                        make_rational(a[2].get<std::string>(), a[3].get<std::string>()));
    }
    return StateVector(n, std::move(amps));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("malformed state: ") + e.what());
  }
}

/// {"len": int, "bits_hex": string}
inline Json program_to_json(const Program& p) { return Json{{"len", p.length()}, {"bits_hex", p.to_hex()}}; }

inline Program program_from_json(const Json& j) {
  try {
    return Program::from_hex(j.at("len").get<std::size_t>(), j.at("bits_hex").get<std::string>());
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("malformed program: ") + e.what());
  }
}

/// 64-bit FNV-1a, rendered as 16 hex digits.
inline std::string content_hash(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

/// Fixed-precision rendering of real-valued report quantities, so byte
/// identical output does not depend on shortest-round-trip formatting.
inline std::string format_real(double v, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace qkc

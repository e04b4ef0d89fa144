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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "qkc/errors.hpp"

namespace qkc {

/// A finite binary string fed to the reference machine.
///
/// Programs order by (length, numeric value); for equal lengths the numeric
/// order coincides with lexicographic order of the bit characters.
class Program {
 public:
  Program() = default;
  explicit Program(std::string bits) : bits_(std::move(bits)) {
    for (char c : bits_)
      if (c != '0' && c != '1') throw UsageError("program bits must be over {0,1}");
  }

  /// Hex with an explicit bit length; bits are packed MSB-first and the last
  /// nibble is zero-padded on the right.
  static Program from_hex(std::size_t len, std::string_view hex) {
    if (hex.size() != (len + 3) / 4) throw UsageError("hex digit count does not match bit length");
    std::string bits;
    bits.reserve(hex.size() * 4);
    for (char h : hex) {
      int v;
      if (h >= '0' && h <= '9') v = h - '0';
      else if (h >= 'a' && h <= 'f') v = h - 'a' + 10;
      else if (h >= 'A' && h <= 'F') v = h - 'A' + 10;
      else throw UsageError("invalid hex digit");
      for (int b = 3; b >= 0; --b) bits.push_back(((v >> b) & 1) ? '1' : '0');
    }
    for (std::size_t i = len; i < bits.size(); ++i)
      if (bits[i] != '0') throw UsageError("nonzero padding bits in hex program");
    bits.resize(len);
    return Program(std::move(bits));
  }

  std::string to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string hex;
    for (std::size_t i = 0; i < bits_.size(); i += 4) {
      int v = 0;
      for (std::size_t b = 0; b < 4; ++b) {
        v <<= 1;
        if (i + b < bits_.size() && bits_[i + b] == '1') v |= 1;
      }
      hex.push_back(kDigits[v]);
    }
    return hex;
  }

  std::size_t length() const { return bits_.size(); }
  const std::string& bits() const { return bits_; }

  friend bool operator==(const Program&, const Program&) = default;
  friend std::strong_ordering operator<=>(const Program& a, const Program& b) {
    if (auto c = a.bits_.size() <=> b.bits_.size(); c != 0) return c;
    return a.bits_.compare(b.bits_) <=> 0;
  }

 private:
  std::string bits_;
};

}  // namespace qkc

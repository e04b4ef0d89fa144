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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qkc/encoding.hpp"
#include "qkc/gaussian_rational.hpp"

namespace qkc {

/// Every instruction encodable on n qubits, with its bit pattern.
inline std::vector<std::pair<Instruction, std::string>> instruction_alphabet(std::uint32_t n) {
  std::vector<std::pair<Instruction, std::string>> out;
  for (std::uint32_t t = 0; t < n; ++t) {
    for (Gate g : {Gate::x(t), Gate::rot(t), Gate::phase(t)}) out.emplace_back(g, encode_instruction(g, n));
    for (std::uint32_t c = 0; c < n; ++c)
      if (c != t) out.emplace_back(Gate::cnot(c, t), encode_instruction(Gate::cnot(c, t), n));
  }
  out.emplace_back(CallConditional{}, encode_instruction(CallConditional{}, n));
  return out;
}

/// Lazily yields every decodable program of length <= max_len, ordered by
/// (length, numeric value). Each length is materialized as one sorted bucket.
class ProgramEnumerator {
 public:
  ProgramEnumerator(std::size_t max_len, std::uint32_t n)
      : max_len_(max_len), n_(n), alphabet_(instruction_alphabet(n)) {}

  std::optional<Program> next() {
    while (pos_ >= bucket_.size()) {
      if (length_ >= max_len_) return std::nullopt;
      ++length_;
      fill_bucket(length_);
    }
    return Program(bucket_[pos_++]);
  }

 private:
  void fill_bucket(std::size_t len) {
    bucket_.clear();
    pos_ = 0;
    for (std::uint64_t count = 0;; ++count) {
      const std::size_t header = detail::gamma_length(count + 1);
      if (header > len) break;
      // Cheapest instruction is 3 bits.
      if (header + 3 * count > len) continue;
      std::string prefix;
      detail::append_gamma(prefix, count + 1);
      extend(prefix, count, len);
    }
    std::sort(bucket_.begin(), bucket_.end());
  }

  void extend(std::string& prefix, std::uint64_t remaining, std::size_t len) {
    if (remaining == 0) {
      if (prefix.size() == len) bucket_.push_back(prefix);
      return;
    }
    for (const auto& [ins, bits] : alphabet_) {
      if (prefix.size() + bits.size() + 3 * (remaining - 1) > len) continue;
      const std::size_t keep = prefix.size();
      prefix += bits;
      extend(prefix, remaining - 1, len);
      prefix.resize(keep);
    }
  }

  std::size_t max_len_;
  std::uint32_t n_;
  std::vector<std::pair<Instruction, std::string>> alphabet_;
  std::size_t length_ = 0;
  std::vector<std::string> bucket_;
  std::size_t pos_ = 0;
};

inline std::vector<Program> enumerate_programs(std::size_t max_len, std::uint32_t n) {
  std::vector<Program> out;
  ProgramEnumerator e(max_len, n);
  while (auto p = e.next()) out.push_back(std::move(*p));
  return out;
}

/// All bit strings of length 1..max_len accepted by `accepts`, by brute force.
template <class Accepts>
std::vector<std::string> scan_decodable(std::size_t max_len, Accepts&& accepts) {
  std::vector<std::string> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::string s(len, '0');
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      for (std::size_t b = 0; b < len; ++b) s[b] = ((v >> (len - 1 - b)) & 1) ? '1' : '0';
      if (accepts(std::string_view(s))) out.push_back(s);
    }
  }
  return out;
}

/// Exhaustive prefix-freeness check over strings up to max_len under an
/// arbitrary acceptance predicate.
template <class Accepts>
bool verify_prefix_free_with(std::size_t max_len, Accepts&& accepts) {
  const auto accepted = scan_decodable(max_len, accepts);
  const std::unordered_set<std::string> set(accepted.begin(), accepted.end());
  for (const auto& s : accepted)
    for (std::size_t k = 1; k < s.size(); ++k)
      if (set.count(s.substr(0, k))) return false;
  return true;
}

inline bool verify_prefix_free(std::size_t max_len, std::uint32_t n) {
  return verify_prefix_free_with(max_len, [n](std::string_view s) { return decode(s, n).ok(); });
}

/// Exact sum of 2^-l(p) over decodable programs with l(p) <= max_len.
inline Rational kraft_sum(std::size_t max_len, std::uint32_t n) {
  Rational sum(0);
  ProgramEnumerator e(max_len, n);
  while (auto p = e.next()) {
    Integer den(1);
    den <<= static_cast<mp_bitcnt_t>(p->length());
    sum += Rational(Integer(1), den);
  }
  return sum;
}

}  // namespace qkc

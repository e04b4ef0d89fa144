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
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qkc/basis.hpp"
#include "qkc/errors.hpp"
#include "qkc/gaussian_rational.hpp"
#include "qkc/state_vector.hpp"

namespace qkc {

/// A code length in bits; std::nullopt stands for an infinite length
/// (an outcome of probability zero).
using CodeLength = std::optional<std::uint64_t>;

inline std::size_t bit_length(const Integer& v) {
  return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

/// Least d >= 0 with q >= 2^-d, i.e. ceil(-log2 q), by integer comparison.
/// q == 0 yields the infinite length.
inline CodeLength penalty_bits(const Rational& q) {
  if (sgn(q) < 0 || q > 1) throw UsageError("probability outside [0,1]");
  if (sgn(q) == 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  std::uint64_t d = bit_length(den) - bit_length(num);  // num <= den
  Integer scaled = num << static_cast<mp_bitcnt_t>(d);
  if (scaled < den) ++d;
  return d;
}

/// log2 q as a double, robust to numerators and denominators far outside
/// double range. Used only for reporting.
inline double log2_rational(const Rational& q) {
  if (sgn(q) <= 0) return -INFINITY;
  long e_num = 0, e_den = 0;
  double m_num = mpz_get_d_2exp(&e_num, q.get_num().get_mpz_t());
  double m_den = mpz_get_d_2exp(&e_den, q.get_den().get_mpz_t());
  return std::log2(m_num) - std::log2(m_den) + static_cast<double>(e_num - e_den);
}

/// Length of the redescription of each basis vector given z:
/// length_i = penalty_bits(|<e_i|z>|^2).
inline std::vector<CodeLength> shannon_fano_lengths(const Basis& basis, const StateVector& z) {
  if (basis.n_qubits() != z.n_qubits()) throw UsageError("basis dimension mismatch");
  std::vector<CodeLength> lengths;
  lengths.reserve(basis.size());
  for (const auto& e : basis.vectors()) lengths.push_back(penalty_bits(fidelity(e, z)));
  return lengths;
}

/// Codewords of the classical Shannon-Fano construction over the outcome
/// distribution q_i = |<e_i|z>|^2: outcomes sorted by descending probability
/// (ties by basis index), codeword = first length_i bits of the binary
/// expansion of the cumulative probability of the preceding outcomes.
/// Zero-probability outcomes get no codeword.
inline std::vector<std::optional<std::string>> shannon_fano_code(const Basis& basis, const StateVector& z) {
  if (basis.n_qubits() != z.n_qubits()) throw UsageError("basis dimension mismatch");
  std::vector<Rational> probs;
  for (const auto& e : basis.vectors()) probs.push_back(fidelity(e, z));
  std::vector<std::size_t> order(probs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return probs[a] > probs[b]; });

  std::vector<std::optional<std::string>> code(probs.size());
  Rational cumulative(0);
  for (std::size_t i : order) {
    const CodeLength len = penalty_bits(probs[i]);
    if (!len) continue;
    std::string word;
    Rational frac = cumulative;
    for (std::uint64_t b = 0; b < *len; ++b) {
      frac *= 2;
      if (frac >= 1) {
        word.push_back('1');
        frac -= 1;
      } else {
        word.push_back('0');
      }
    }
    code[i] = std::move(word);
    cumulative += probs[i];
  }
  return code;
}

}  // namespace qkc

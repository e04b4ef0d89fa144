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
#include <random>
#include <vector>

#include "qkc/encoding.hpp"
#include "qkc/state_vector.hpp"

namespace qkc {

// All randomness is drawn from mt19937_64 through the helpers below, which
// only use raw engine output, so streams are identical on every platform.
using Rng = std::mt19937_64;

/// Independent stream for (seed, index), e.g. one per enumerated program.
inline Rng make_rng(std::uint64_t seed, std::uint64_t index = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

/// Uniform in [0, bound), by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Pseudo-random unit vector with Gaussian-rational amplitudes, from the
/// inverse stereographic projection of an integer point t in Z^(2N-1)
/// scaled by d:  (2 d t, |t|^2 - d^2) / (|t|^2 + d^2).
inline StateVector random_rational_state(std::uint32_t n, Rng& rng, std::int64_t range = 6) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t m = 2 * dim - 1;
  std::vector<std::int64_t> t(m);
  std::int64_t d = 1 + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(range)));
  std::int64_t s = 0;
  for (auto& v : t) {
    v = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(2 * range + 1))) - range;
    s += v * v;
  }
  const Integer denom = Integer(s) + Integer(d) * d;
  std::vector<Rational> coords;
  for (auto v : t) coords.emplace_back(Integer(2 * d * v), denom);
  coords.emplace_back(Integer(s) - Integer(d) * d, denom);
  std::vector<GaussianRational> amps;
  for (std::size_t i = 0; i < dim; ++i) amps.emplace_back(coords[2 * i], coords[2 * i + 1]);
  return StateVector(n, std::move(amps));
}

inline Gate random_gate(std::uint32_t n, Rng& rng) {
  const auto t = static_cast<std::uint32_t>(uniform_below(rng, n));
  const auto kind = uniform_below(rng, n > 1 ? 4 : 3);
  switch (kind) {
    case 0: return Gate::x(t);
    case 1: return Gate::rot(t);
    case 2: return Gate::phase(t);
    default: {
      auto c = static_cast<std::uint32_t>(uniform_below(rng, n - 1));
      if (c >= t) ++c;
      return Gate::cnot(c, t);
    }
  }
}

inline std::vector<Gate> random_circuit(std::uint32_t n, std::size_t gates, Rng& rng) {
  std::vector<Gate> out;
  for (std::size_t i = 0; i < gates; ++i) out.push_back(random_gate(n, rng));
  return out;
}

}  // namespace qkc

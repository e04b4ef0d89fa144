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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qkc/errors.hpp"
#include "qkc/gate.hpp"
#include "qkc/gaussian_rational.hpp"

namespace qkc {

/// Pure state on n qubits with exact Gaussian-rational amplitudes.
///
/// Index convention: qubit 0 is the most significant bit of the amplitude
/// index, so for n = 2 the amplitudes are ordered |00>, |01>, |10>, |11> and
/// qubit 0 is the left symbol.
///
/// Invariants (checked on construction from untrusted data):
///   amps.size() == 2^n and sum |amps_i|^2 == 1 exactly.
class StateVector {
 public:
  static constexpr std::uint32_t kMaxQubits = 20;

  /// Validates dimension and exact unit norm.
  StateVector(std::uint32_t n_qubits, std::vector<GaussianRational> amps)
      : n_(n_qubits), amps_(std::move(amps)) {
    check_dimension(n_, amps_.size());
    if (norm2() != 1) throw UsageError("state is not unit norm");
  }

  /// |b_0 b_1 ... b_{n-1}>, b_0 being qubit 0.
  static StateVector basis_state(std::uint32_t n_qubits, std::uint64_t index) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) throw UsageError("qubit count out of range");
    if (index >= (std::uint64_t{1} << n_qubits)) throw UsageError("basis index out of range");
    std::vector<GaussianRational> amps(std::size_t{1} << n_qubits);
    amps[index] = GaussianRational(1);
    return StateVector(n_qubits, std::move(amps), Trusted{});
  }

  static StateVector zero(std::uint32_t n_qubits) { return basis_state(n_qubits, 0); }

  /// Classical bit string such as "01"; character 0 is qubit 0.
  static StateVector classical(const std::string& bits) {
    if (bits.empty()) throw UsageError("empty classical bit string");
    std::uint64_t index = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') throw UsageError("classical string must be over {0,1}");
      index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return basis_state(static_cast<std::uint32_t>(bits.size()), index);
  }

  std::uint32_t n_qubits() const { return n_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const GaussianRational> amplitudes() const { return amps_; }
  const GaussianRational& operator[](std::size_t i) const { return amps_[i]; }

  Rational norm2() const {
    Rational s(0);
    for (const auto& a : amps_) s += a.norm2();
    return s;
  }

  friend bool operator==(const StateVector& a, const StateVector& b) {
    return a.n_ == b.n_ && a.amps_ == b.amps_;
  }
  friend bool operator!=(const StateVector& a, const StateVector& b) { return !(a == b); }

 private:
  struct Trusted {};
  // Used by operations that preserve the norm exactly (unitary gates, tensor).
  StateVector(std::uint32_t n_qubits, std::vector<GaussianRational> amps, Trusted)
      : n_(n_qubits), amps_(std::move(amps)) {}

  static void check_dimension(std::uint32_t n, std::size_t size) {
    if (n == 0 || n > kMaxQubits) throw UsageError("qubit count out of range");
    if (size != (std::size_t{1} << n)) throw UsageError("amplitude count must be 2^n");
  }

  friend StateVector apply_gate(const StateVector& state, const Gate& gate);
  friend StateVector tensor(const StateVector& x, const StateVector& y);

  std::uint32_t n_;
  std::vector<GaussianRational> amps_;
};

inline void validate_gate(const Gate& gate, std::uint32_t n_qubits) {
  if (gate.target >= n_qubits) throw UsageError("gate target " + to_string(gate) + " out of range");
  if (gate.kind == GateKind::CNOT) {
    if (gate.control >= n_qubits) throw UsageError("gate control " + to_string(gate) + " out of range");
    if (gate.control == gate.target) throw UsageError("CNOT control equals target");
  }
}

/// Exact action of one gate.
inline StateVector apply_gate(const StateVector& state, const Gate& gate) {
  const std::uint32_t n = state.n_qubits();
  validate_gate(gate, n);
  const std::size_t dim = state.dimension();
  const std::size_t tmask = std::size_t{1} << (n - 1 - gate.target);
  std::vector<GaussianRational> out = state.amps_;

  switch (gate.kind) {
    case GateKind::X:
      for (std::size_t i = 0; i < dim; ++i)
        if (!(i & tmask)) std::swap(out[i], out[i | tmask]);
      break;
    case GateKind::CNOT: {
      const std::size_t cmask = std::size_t{1} << (n - 1 - gate.control);
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & cmask) && !(i & tmask)) std::swap(out[i], out[i | tmask]);
      break;
    }
    case GateKind::ROT: {
      static const Rational kCos(3, 5);
      static const Rational kSin(4, 5);
      const GaussianRational c(kCos), s(kSin);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & tmask) continue;
        const GaussianRational& a0 = state.amps_[i];
        const GaussianRational& a1 = state.amps_[i | tmask];
        out[i] = c * a0 - s * a1;
        out[i | tmask] = s * a0 + c * a1;
      }
      break;
    }
    case GateKind::PHASE: {
      const GaussianRational im = GaussianRational::i();
      for (std::size_t i = 0; i < dim; ++i)
        if (i & tmask) out[i] = im * out[i];
      break;
    }
  }
  return StateVector(n, std::move(out), StateVector::Trusted{});
}

inline StateVector apply_gates(StateVector state, std::span<const Gate> gates) {
  for (const auto& g : gates) state = apply_gate(state, g);
  return state;
}

/// <x|z> = sum conj(x_i) z_i
inline GaussianRational inner_product(const StateVector& x, const StateVector& z) {
  if (x.n_qubits() != z.n_qubits()) throw UsageError("dimension mismatch");
  GaussianRational s;
  for (std::size_t i = 0; i < x.dimension(); ++i) s += x[i].conj() * z[i];
  return s;
}

/// |<x|z>|^2, the probability that z passes the projection test for x.
inline Rational fidelity(const StateVector& x, const StateVector& z) {
  return inner_product(x, z).norm2();
}

/// x (qubits 0..n_x-1) followed by y (qubits n_x..n_x+n_y-1).
inline StateVector tensor(const StateVector& x, const StateVector& y) {
  const std::uint32_t n = x.n_qubits() + y.n_qubits();
  if (n > StateVector::kMaxQubits) throw UsageError("tensor product too large");
  std::vector<GaussianRational> out;
  out.reserve(x.dimension() * y.dimension());
  for (const auto& a : x.amps_)
    for (const auto& b : y.amps_) out.push_back(a * b);
  return StateVector(n, std::move(out), StateVector::Trusted{});
}

}  // namespace qkc

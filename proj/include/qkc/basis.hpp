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
#include <span>
#include <utility>
#include <vector>

#include "qkc/errors.hpp"
#include "qkc/state_vector.hpp"

namespace qkc {

/// Orthonormal basis of the 2^n-dimensional state space.
///
/// Construction from arbitrary vectors checks pairwise orthogonality exactly;
/// this is O(N^3) rational work and meant for small n.
class Basis {
 public:
  explicit Basis(std::vector<StateVector> vectors) : vectors_(std::move(vectors)) {
    if (vectors_.empty()) throw UsageError("empty basis");
    const std::uint32_t n = vectors_.front().n_qubits();
    if (vectors_.size() != (std::size_t{1} << n)) throw UsageError("basis must have 2^n vectors");
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      if (vectors_[i].n_qubits() != n) throw UsageError("basis vectors differ in dimension");
      for (std::size_t j = i + 1; j < vectors_.size(); ++j)
        if (!inner_product(vectors_[i], vectors_[j]).is_zero())
          throw UsageError("basis vectors are not orthogonal");
    }
  }

  static Basis standard(std::uint32_t n) {
    std::vector<StateVector> v;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) v.push_back(StateVector::basis_state(n, i));
    return Basis(std::move(v), Unchecked{});
  }

  /// Image of the standard basis under a fixed gate circuit. Unitaries map
  /// orthonormal bases to orthonormal bases, so no check is needed.
  static Basis rotated(std::uint32_t n, std::span<const Gate> circuit) {
    std::vector<StateVector> v;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i)
      v.push_back(apply_gates(StateVector::basis_state(n, i), circuit));
    return Basis(std::move(v), Unchecked{});
  }

  std::uint32_t n_qubits() const { return vectors_.front().n_qubits(); }
  std::size_t size() const { return vectors_.size(); }
  const StateVector& operator[](std::size_t i) const { return vectors_[i]; }
  std::span<const StateVector> vectors() const { return vectors_; }

 private:
  struct Unchecked {};
  Basis(std::vector<StateVector> vectors, Unchecked) : vectors_(std::move(vectors)) {}

  std::vector<StateVector> vectors_;
};

/// The fixed ROT/CNOT circuit used to build one non-classical basis per n.
inline std::vector<Gate> default_rotation_circuit(std::uint32_t n) {
  std::vector<Gate> c;
  for (std::uint32_t q = 0; q < n; ++q) c.push_back(Gate::rot(q));
  for (std::uint32_t q = 0; q + 1 < n; ++q) c.push_back(Gate::cnot(q, q + 1));
  if (n > 1) c.push_back(Gate::rot(n - 1));
  return c;
}

}  // namespace qkc

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
#include <ostream>
#include <string>

namespace qkc {

enum class GateKind : std::uint8_t { X, CNOT, ROT, PHASE };

/// One gate of the reference machine.
///
///   X(t)       bit flip
///   CNOT(c, t) controlled bit flip, c != t
///   ROT(t)     real rotation [[3/5, -4/5], [4/5, 3/5]]
///   PHASE(t)   diag(1, i)
///
/// Every matrix entry lies in Q(i), so states reached from |0...0> keep
/// Gaussian-rational amplitudes.
struct Gate {
  GateKind kind = GateKind::X;
  std::uint32_t target = 0;
  std::uint32_t control = 0;  // CNOT only

  static Gate x(std::uint32_t t) { return {GateKind::X, t, 0}; }
  static Gate cnot(std::uint32_t c, std::uint32_t t) { return {GateKind::CNOT, t, c}; }
  static Gate rot(std::uint32_t t) { return {GateKind::ROT, t, 0}; }
  static Gate phase(std::uint32_t t) { return {GateKind::PHASE, t, 0}; }

  friend bool operator==(const Gate& a, const Gate& b) {
    if (a.kind != b.kind || a.target != b.target) return false;
    return a.kind != GateKind::CNOT || a.control == b.control;
  }
  friend bool operator!=(const Gate& a, const Gate& b) { return !(a == b); }
};

inline std::string to_string(const Gate& g) {
  switch (g.kind) {
    case GateKind::X: return "X(" + std::to_string(g.target) + ")";
    case GateKind::CNOT:
      return "CNOT(" + std::to_string(g.control) + "," + std::to_string(g.target) + ")";
    case GateKind::ROT: return "ROT(" + std::to_string(g.target) + ")";
    case GateKind::PHASE: return "PHASE(" + std::to_string(g.target) + ")";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, const Gate& g) { return os << to_string(g); }

}  // namespace qkc

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
#include <optional>
#include <variant>
#include <vector>

#include "qkc/encoding.hpp"
#include "qkc/state_vector.hpp"

namespace qkc {

enum class RunStatus { kHalted, kDecodeFailed };

struct RunResult {
  Program program;
  std::optional<StateVector> output;  // set iff status == kHalted
  std::uint64_t steps = 0;            // gate applications, CALLC bodies inlined
  RunStatus status = RunStatus::kDecodeFailed;
  std::uint64_t sequence = 0;         // position in the program stream it came from

  bool halted() const { return status == RunStatus::kHalted; }
};

/// Flattens CALLC sites into the conditional's gates. Returns nullopt when
/// the program calls a conditional that was not supplied.
inline std::optional<std::vector<Gate>> expand(const DecodedProgram& program,
                                               const DecodedProgram* conditional) {
  std::vector<Gate> gates;
  for (const auto& ins : program.instructions) {
    if (const Gate* g = std::get_if<Gate>(&ins)) {
      gates.push_back(*g);
      continue;
    }
    if (!conditional) return std::nullopt;
    for (const auto& c : conditional->instructions) gates.push_back(std::get<Gate>(c));
  }
  return gates;
}

/// Runs a program on |0...0> of n qubits.
inline RunResult run(const Program& program, std::uint32_t n, const DecodedProgram* conditional = nullptr) {
  RunResult r;
  r.program = program;
  DecodeResult d = decode(program, n);
  if (!d.ok()) return r;
  auto gates = expand(*d.program, conditional);
  if (!gates) return r;
  for (const Gate& g : *gates)
    if (g.target >= n || (g.kind == GateKind::CNOT && g.control >= n)) return r;
  r.output = apply_gates(StateVector::zero(n), *gates);
  r.steps = gates->size();
  r.status = RunStatus::kHalted;
  return r;
}

}  // namespace qkc

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
#include <vector>

#include "qkc/cache.hpp"
#include "qkc/dovetail.hpp"
#include "qkc/enumerate.hpp"
#include "qkc/shannon_fano.hpp"

namespace qkc {

/// One candidate description of a target: program p, its length l(p), the
/// fidelity q of its output with the target, the penalty ceil(-log2 q) and
/// the total l(p) + penalty.
struct EstimateRecord {
  Program program;
  std::uint64_t length = 0;
  Rational fidelity;
  std::uint64_t penalty = 0;
  std::uint64_t total = 0;
};

/// Strict preference: smaller total, then shorter program, then smaller value.
inline bool better(const EstimateRecord& a, const EstimateRecord& b) {
  if (a.total != b.total) return a.total < b.total;
  if (a.length != b.length) return a.length < b.length;
  return a.program < b.program;
}

struct ExactTraceEntry {
  std::uint64_t processed = 0;  // halted candidates seen when the minimum changed
  Program program;
  std::uint64_t total = 0;
};

/// Length-bounded, machine-relative complexity of a target:
///   min over halting p with l(p) <= max_len of l(p) + ceil(-log2 |<target|U(p)>|^2)
struct ExactEstimate {
  std::uint32_t n = 0;
  std::size_t max_len = 0;
  std::optional<EstimateRecord> best;  // empty: no finite estimate at this bound
  // Shortest program whose output has fidelity exactly 1 with the target:
  // set iff the target is directly computable within the bound. It need not
  // be the overall minimum, which may trade a penalty for a shorter program.
  std::optional<EstimateRecord> best_exact;
  std::vector<ExactTraceEntry> trace;
  std::uint64_t candidates = 0;
};

inline std::optional<EstimateRecord> make_record(const Program& p, const StateVector& output,
                                                 const StateVector& target) {
  Rational q = fidelity(target, output);
  CodeLength pen = penalty_bits(q);
  if (!pen) return std::nullopt;
  return EstimateRecord{p, p.length(), std::move(q), *pen, p.length() + *pen};
}

/// Calls fn(const RunResult&) for every halted program of length <= max_len,
/// served from `table` when it covers the request and otherwise produced by
/// dovetailing the enumeration.
template <class Fn>
void for_each_halted(std::uint32_t n, std::size_t max_len, const DecodedProgram* conditional,
                     const OutputTable* table, Fn&& fn) {
  if (table && !conditional && table->n == n && table->max_len >= max_len) {
    for (const auto& r : table->entries)
      if (r.program.length() <= max_len) fn(r);
    return;
  }
  Dovetailer dt(ProgramEnumerator(max_len, n), n, conditional);
  while (auto r = dt.next()) fn(*r);
}

inline ExactEstimate exact_estimate(const StateVector& target, std::size_t max_len,
                                    const DecodedProgram* conditional = nullptr,
                                    const OutputTable* table = nullptr) {
  ExactEstimate est;
  est.n = target.n_qubits();
  est.max_len = max_len;
  for_each_halted(est.n, max_len, conditional, table, [&](const RunResult& r) {
    ++est.candidates;
    auto rec = make_record(r.program, *r.output, target);
    if (!rec) return;
    if (rec->penalty == 0 && (!est.best_exact || better(*rec, *est.best_exact))) est.best_exact = rec;
    if (!est.best || better(*rec, *est.best)) {
      est.trace.push_back({est.candidates, rec->program, rec->total});
      est.best = std::move(rec);
    }
  });
  return est;
}

/// Standard-basis witness for the worst-case bound: the basis vector e_i of
/// largest fidelity with the target (smallest i on ties) has fidelity at
/// least 2^-n, so the X-gate program preparing e_i costs at most n penalty
/// bits.
struct UpperBoundWitness {
  std::uint64_t basis_index = 0;
  std::vector<Gate> gates;
  EstimateRecord record;
};

inline std::vector<Gate> classical_preparation(std::uint32_t n, std::uint64_t index) {
  std::vector<Gate> gates;
  for (std::uint32_t q = 0; q < n; ++q)
    if ((index >> (n - 1 - q)) & 1) gates.push_back(Gate::x(q));
  return gates;
}

inline UpperBoundWitness upper_bound_witness(const StateVector& target) {
  const std::uint32_t n = target.n_qubits();
  std::uint64_t best = 0;
  for (std::uint64_t i = 1; i < target.dimension(); ++i)
    if (target[i].norm2() > target[best].norm2()) best = i;
  UpperBoundWitness w;
  w.basis_index = best;
  w.gates = classical_preparation(n, best);
  const Program p = encode(w.gates, n);
  // fidelity >= 2^-n > 0, so the record always exists
  w.record = *make_record(p, StateVector::basis_state(n, best), target);
  return w;
}

}  // namespace qkc

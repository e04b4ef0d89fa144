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
#include <string>
#include <vector>

#include "qkc/basis.hpp"
#include "qkc/estimator.hpp"
#include "qkc/random.hpp"

namespace qkc {

// ---------------------------------------------------------------------------
// Incompressibility census
//
// For every basis vector e_i the estimate is K(e_i | n) restricted to programs
// of length <= max_len. The count of vectors with estimate < n - c is always
// below 2^(n-c): a halted program p covers at most 2^d vectors with penalty
// <= d (their fidelities are each >= 2^-d and sum to <= 1), and
// sum_p 2^-l(p) <= 1 by Kraft, so at most 2^(n-c-1) vectors can have
// l(p) + d < n - c.
// ---------------------------------------------------------------------------

struct CensusReport {
  std::uint32_t n = 0;
  std::uint32_t c = 0;
  std::size_t max_len = 0;
  std::string basis_name;
  std::vector<ExactEstimate> estimates;  // one per basis vector
  std::uint64_t count_below = 0;
  Rational bound;  // 2^(n-c)
  bool verdict = false;
};

/// True when the estimate is finite and strictly below n - c.
inline bool below_threshold(const ExactEstimate& e, std::uint32_t n, std::uint32_t c) {
  if (!e.best) return false;
  return static_cast<std::int64_t>(e.best->total) < static_cast<std::int64_t>(n) - static_cast<std::int64_t>(c);
}

inline Rational power_of_two(std::int64_t e) {
  Integer p(1);
  p <<= static_cast<mp_bitcnt_t>(e < 0 ? -e : e);
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

inline CensusReport incompressibility_census(const Basis& basis, std::uint32_t c, std::size_t max_len,
                                             std::string basis_name = "standard",
                                             const OutputTable* table = nullptr) {
  CensusReport r;
  r.n = basis.n_qubits();
  r.c = c;
  r.max_len = max_len;
  r.basis_name = std::move(basis_name);
  for (const auto& e : basis.vectors()) {
    r.estimates.push_back(exact_estimate(e, max_len, nullptr, table));
    if (below_threshold(r.estimates.back(), r.n, c)) ++r.count_below;
  }
  r.bound = power_of_two(static_cast<std::int64_t>(r.n) - c);
  r.verdict = Rational(static_cast<unsigned long>(r.count_below)) < r.bound;
  return r;
}

inline CensusReport incompressibility_census(std::uint32_t n, std::uint32_t c, std::size_t max_len,
                                             const OutputTable* table = nullptr) {
  return incompressibility_census(Basis::standard(n), c, max_len, "standard", table);
}

/// Monte Carlo stand-in for the continuum statement: the fraction of
/// pseudo-random rational unit vectors whose estimate is >= n - c.
struct UniformSweep {
  std::uint32_t n = 0;
  std::uint32_t c = 0;
  std::size_t max_len = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t at_least = 0;  // estimate >= n - c, or no finite estimate

  double fraction() const { return samples ? static_cast<double>(at_least) / samples : 0.0; }
};

inline UniformSweep uniform_sweep(std::uint32_t n, std::uint32_t c, std::size_t max_len, std::uint64_t samples,
                                  std::uint64_t seed, const OutputTable* table = nullptr) {
  UniformSweep s{n, c, max_len, samples, seed, 0};
  Rng rng = make_rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto e = exact_estimate(random_rational_state(n, rng), max_len, nullptr, table);
    if (!below_threshold(e, n, c)) ++s.at_least;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Classical consistency: A = estimate with penalties allowed, B = shortest
// program whose output equals the classical basis state exactly.
// ---------------------------------------------------------------------------

struct ConsistencyReport {
  std::string bits;
  std::size_t max_len = 0;
  ExactEstimate estimate;               // A
  std::optional<Program> exact_program; // witness for B
  std::optional<std::int64_t> gap;      // B - A; empty when no exact program fits in max_len

  std::optional<std::uint64_t> exact_length() const {
    if (!exact_program) return std::nullopt;
    return exact_program->length();
  }
};

inline ConsistencyReport consistency_report(const std::string& bits, std::size_t max_len,
                                            const OutputTable* table = nullptr) {
  const StateVector target = StateVector::classical(bits);
  ConsistencyReport r;
  r.bits = bits;
  r.max_len = max_len;
  r.estimate.n = target.n_qubits();
  r.estimate.max_len = max_len;
  for_each_halted(target.n_qubits(), max_len, nullptr, table, [&](const RunResult& run) {
    ++r.estimate.candidates;
    if (*run.output == target && (!r.exact_program || run.program < *r.exact_program))
      r.exact_program = run.program;
    auto rec = make_record(run.program, *run.output, target);
    if (rec && (!r.estimate.best || better(*rec, *r.estimate.best))) {
      r.estimate.trace.push_back({r.estimate.candidates, rec->program, rec->total});
      r.estimate.best = std::move(rec);
    }
  });
  if (r.exact_program && r.estimate.best)
    r.gap = static_cast<std::int64_t>(r.exact_program->length()) - static_cast<std::int64_t>(r.estimate.best->total);
  return r;
}

// ---------------------------------------------------------------------------
// Sub-additivity for directly computable states x = U(p_x), y = U(p_y):
//   K(x, y) <= K(x | p_y) + K(y)
// The joint target is x (qubits 0..n-1) tensor y (qubits n..2n-1). The
// constructive joint description runs the winner for y on the second
// register and the winner for x given p_y on the first, each CALLC replaced
// by p_y's gates. A run is conclusive when all three estimates are finite
// and that description fits within max_len.
// ---------------------------------------------------------------------------

struct SubadditivityReport {
  Program p_x;
  Program p_y;
  std::uint32_t n = 0;
  std::size_t max_len = 0;
  ExactEstimate joint;          // K(x, y)
  ExactEstimate x_given_y;      // K(x | p_y)
  ExactEstimate y;              // K(y)
  std::optional<Program> concatenation;  // constructive joint description
  bool conclusive = false;
  std::optional<std::int64_t> slack;  // K(x|p_y) + K(y) - K(x,y)
};

namespace detail {

inline std::vector<Gate> expand_required(const Program& p, std::uint32_t n, const DecodedProgram* conditional) {
  DecodeResult d = decode(p, n);
  if (!d.ok()) throw UsageError(std::string("program does not decode: ") + to_string(d.error));
  auto gates = expand(*d.program, conditional);
  if (!gates) throw UsageError("program calls a conditional that was not supplied");
  return *gates;
}

inline StateVector directly_computable(const Program& p, std::uint32_t n) {
  RunResult r = run(p, n);
  if (!r.halted()) throw UsageError("program " + p.bits() + " does not halt without a conditional");
  return *r.output;
}

inline std::vector<Gate> shift_gates(std::vector<Gate> gates, std::uint32_t offset) {
  for (auto& g : gates) {
    g.target += offset;
    if (g.kind == GateKind::CNOT) g.control += offset;
  }
  return gates;
}

}  // namespace detail

inline SubadditivityReport subadditivity_report(const Program& p_x, const Program& p_y, std::uint32_t n,
                                                std::size_t max_len, const OutputTable* joint_table = nullptr,
                                                const OutputTable* single_table = nullptr) {
  SubadditivityReport r{p_x, p_y, n, max_len, {}, {}, {}, std::nullopt, false, std::nullopt};
  const StateVector x = detail::directly_computable(p_x, n);
  const StateVector y = detail::directly_computable(p_y, n);
  const DecodedProgram cond = decode_conditional(p_y, n);

  r.joint = exact_estimate(tensor(x, y), max_len, nullptr, joint_table);
  r.x_given_y = exact_estimate(x, max_len, &cond);
  r.y = exact_estimate(y, max_len, nullptr, single_table);
  if (!r.joint.best || !r.x_given_y.best || !r.y.best) return r;

  std::vector<Gate> gates = detail::shift_gates(detail::expand_required(r.y.best->program, n, nullptr), n);
  for (const Gate& g : detail::expand_required(r.x_given_y.best->program, n, &cond)) gates.push_back(g);
  r.concatenation = encode(gates, 2 * n);
  r.conclusive = r.concatenation->length() <= max_len;
  if (r.conclusive)
    r.slack = static_cast<std::int64_t>(r.x_given_y.best->total + r.y.best->total) -
              static_cast<std::int64_t>(r.joint.best->total);
  return r;
}

// ---------------------------------------------------------------------------
// Joint bound K(x, y) <= K(y) - log2 |<x|y>|^2, reported with its slack
// (rhs - lhs); the relation only holds up to a logarithmic term.
// ---------------------------------------------------------------------------

struct JointBoundReport {
  Program p_x;
  Program p_y;
  std::uint32_t n = 0;
  std::size_t max_len = 0;
  Rational mutual_fidelity;
  bool applicable = false;  // false for orthogonal pairs
  ExactEstimate joint;      // lhs
  ExactEstimate y;
  std::optional<double> rhs;
  std::optional<double> slack;
};

inline JointBoundReport joint_bound_report(const Program& p_x, const Program& p_y, std::uint32_t n,
                                           std::size_t max_len, const OutputTable* joint_table = nullptr,
                                           const OutputTable* single_table = nullptr) {
  JointBoundReport r;
  r.p_x = p_x;
  r.p_y = p_y;
  r.n = n;
  r.max_len = max_len;
  const StateVector x = detail::directly_computable(p_x, n);
  const StateVector y = detail::directly_computable(p_y, n);
  r.mutual_fidelity = fidelity(x, y);
  if (sgn(r.mutual_fidelity) == 0) return r;
  r.applicable = true;
  r.joint = exact_estimate(tensor(x, y), max_len, nullptr, joint_table);
  r.y = exact_estimate(y, max_len, nullptr, single_table);
  if (r.joint.best && r.y.best) {
    r.rhs = static_cast<double>(r.y.best->total) - log2_rational(r.mutual_fidelity);
    r.slack = *r.rhs - static_cast<double>(r.joint.best->total);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Worked example: a classical string with one position rotated by ROT. The
// exact 1/sqrt(2) amplitude is not reachable with rational gates, so the
// rotated bit carries amplitudes (3/5, 4/5) (or (-4/5, 3/5) from |1>).
// Only constructive upper bounds are reported.
// ---------------------------------------------------------------------------

struct SuperposedBitExample {
  std::string bits;
  std::uint32_t position = 0;
  std::size_t max_len = 0;
  StateVector target = StateVector::zero(1);
  Rational fidelity_bit0;  // probability of reading 0 at the rotated position
  Rational fidelity_bit1;
  ExactEstimate rotated;
  ExactEstimate classical;
  std::uint64_t rot_program_length = 0;  // l(encode([ROT(position)]))
  bool bound_applicable = false;         // the constructive program fits in max_len
  bool bound_holds = false;              // K(rotated) <= K(classical) + rot_program_length
};

inline SuperposedBitExample superposed_bit_example(const std::string& bits, std::uint32_t position,
                                                   std::size_t max_len, const OutputTable* table = nullptr) {
  SuperposedBitExample ex;
  ex.bits = bits;
  ex.position = position;
  ex.max_len = max_len;
  const StateVector cls = StateVector::classical(bits);
  const std::uint32_t n = cls.n_qubits();
  if (position >= n) throw UsageError("rotation position out of range");
  ex.target = apply_gate(cls, Gate::rot(position));

  const std::size_t mask = std::size_t{1} << (n - 1 - position);
  ex.fidelity_bit0 = Rational(0);
  ex.fidelity_bit1 = Rational(0);
  for (std::size_t i = 0; i < ex.target.dimension(); ++i)
    ((i & mask) ? ex.fidelity_bit1 : ex.fidelity_bit0) += ex.target[i].norm2();

  ex.rotated = exact_estimate(ex.target, max_len, nullptr, table);
  ex.classical = exact_estimate(cls, max_len, nullptr, table);
  const Gate rot = Gate::rot(position);
  ex.rot_program_length = encode(std::span<const Gate>(&rot, 1), n).length();
  if (ex.classical.best) {
    auto gates = detail::expand_required(ex.classical.best->program, n, nullptr);
    gates.push_back(rot);
    ex.bound_applicable = encode(gates, n).length() <= max_len;
    ex.bound_holds = ex.rotated.best && ex.rotated.best->total <= ex.classical.best->total + ex.rot_program_length;
  }
  return ex;
}

}  // namespace qkc

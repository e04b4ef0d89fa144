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
#include <deque>
#include <list>
#include <optional>
#include <utility>
#include <vector>

#include "qkc/executor.hpp"

namespace qkc {

/// Staged interleaving of a (possibly unbounded) program stream p_1, p_2, ...
///
/// Stage k admits p_k and then gives program p_{k-i+1} its i-th step for
/// i = 1..k, so after k stages p_j has received max(0, k - j + 1) steps
/// unless it halted earlier. Step 1 decodes the program (and applies its
/// first gate if it has one); every further step applies one gate. Halted
/// programs are emitted in completion order; programs that fail to decode
/// are dropped and counted.
///
/// With a step budget, scheduling stops as soon as the budget is spent; the
/// programs still running or never admitted are reported by unfinished() and
/// budget_exhausted().
template <class Source>
class Dovetailer {
 public:
  Dovetailer(Source source, std::uint32_t n, const DecodedProgram* conditional = nullptr,
             std::optional<std::uint64_t> step_budget = std::nullopt)
      : source_(std::move(source)), n_(n), conditional_(conditional), budget_(step_budget) {}

  std::optional<RunResult> next() {
    while (ready_.empty()) {
      if (halted_scheduling_) return std::nullopt;
      if (source_done_ && active_.empty()) return std::nullopt;
      run_stage();
    }
    RunResult r = std::move(ready_.front());
    ready_.pop_front();
    return r;
  }

  std::uint64_t stage() const { return stage_; }
  std::uint64_t steps_used() const { return steps_used_; }
  std::uint64_t decode_failures() const { return decode_failures_; }
  bool budget_exhausted() const { return halted_scheduling_; }

  /// Scheduled steps received so far by p_j (1-based).
  std::uint64_t steps_received(std::uint64_t j) const {
    return j >= 1 && j <= progress_.size() ? progress_[j - 1] : 0;
  }

  /// Programs admitted but not finished when the budget ran out.
  std::vector<Program> unfinished() const {
    std::vector<Program> out;
    for (const auto& a : active_) out.push_back(a.program);
    return out;
  }

 private:
  struct Active {
    std::uint64_t index;  // j, 1-based
    Program program;
    std::vector<Gate> gates;
    std::optional<StateVector> state;
    std::uint64_t applied = 0;
  };

  void run_stage() {
    ++stage_;
    if (!source_done_) {
      if (auto p = source_.next()) {
        active_.push_front(Active{stage_, std::move(*p), {}, std::nullopt, 0});
        progress_.push_back(0);
      } else {
        source_done_ = true;
      }
    }
    // Newest program first: p_k gets step 1, p_{k-1} step 2, ...
    for (auto it = active_.begin(); it != active_.end();) {
      if (budget_ && steps_used_ >= *budget_) {
        halted_scheduling_ = true;
        return;
      }
      ++steps_used_;
      ++progress_[it->index - 1];
      if (step(*it)) {
        it = active_.erase(it);
      } else {
        ++it;
      }
    }
  }

  // Returns true when the program left the active set.
  bool step(Active& a) {
    if (!a.state) {
      DecodeResult d = decode(a.program, n_);
      std::optional<std::vector<Gate>> gates;
      if (d.ok()) gates = expand(*d.program, conditional_);
      bool valid = gates.has_value();
      if (valid)
        for (const Gate& g : *gates)
          if (g.target >= n_ || (g.kind == GateKind::CNOT && g.control >= n_)) valid = false;
      if (!valid) {
        ++decode_failures_;
        return true;
      }
      a.gates = std::move(*gates);
      a.state = StateVector::zero(n_);
    }
    if (a.applied < a.gates.size()) {
      a.state = apply_gate(*a.state, a.gates[a.applied]);
      ++a.applied;
    }
    if (a.applied < a.gates.size()) return false;
    RunResult r;
    r.program = std::move(a.program);
    r.output = std::move(a.state);
    r.steps = a.applied;
    r.status = RunStatus::kHalted;
    r.sequence = a.index - 1;
    ready_.push_back(std::move(r));
    return true;
  }

  Source source_;
  std::uint32_t n_;
  const DecodedProgram* conditional_;
  std::optional<std::uint64_t> budget_;
  std::list<Active> active_;
  std::deque<RunResult> ready_;
  std::vector<std::uint64_t> progress_;
  std::uint64_t stage_ = 0;
  std::uint64_t steps_used_ = 0;
  std::uint64_t decode_failures_ = 0;
  bool source_done_ = false;
  bool halted_scheduling_ = false;
};

/// Adapts a vector of programs to the next() interface.
class VectorProgramSource {
 public:
  explicit VectorProgramSource(std::vector<Program> programs) : programs_(std::move(programs)) {}
  std::optional<Program> next() {
    if (pos_ >= programs_.size()) return std::nullopt;
    return programs_[pos_++];
  }

 private:
  std::vector<Program> programs_;
  std::size_t pos_ = 0;
};

}  // namespace qkc

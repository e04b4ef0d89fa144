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

// Estimates the complexity of a few two-qubit states and prints the winning
// descriptions.

#include <iostream>

#include "qkc/qkc.hpp"

int main() {
  using namespace qkc;
  constexpr std::uint32_t n = 2;
  constexpr std::size_t max_len = 14;
  const OutputTable table = compute_outputs(n, max_len);

  const std::vector<Gate> bell{Gate::rot(0), Gate::cnot(0, 1)};
  const std::vector<std::pair<std::string, StateVector>> targets{
      {"|00>", StateVector::classical("00")},
      {"|11>", StateVector::classical("11")},
      {"ROT(0) CNOT(0,1) |00>", apply_gates(StateVector::zero(n), bell)},
  };

  for (const auto& [name, target] : targets) {
    const ExactEstimate e = exact_estimate(target, max_len, nullptr, &table);
    std::cout << name << ": ";
    if (!e.best) {
      std::cout << "no description within " << max_len << " bits\n";
      continue;
    }
    const auto& b = *e.best;
    std::cout << "total " << b.total << " = length " << b.length << " + penalty " << b.penalty << "  via ["
              << to_string(*decode(b.program, n).program) << "], fidelity " << b.fidelity << "\n";
  }

  const SamplingPlan plan = SamplingPlan::from_bound(n, 0.05, 0.25);
  const SampledEstimate s = sampled_estimate(targets[2].second, plan, max_len, 1, nullptr, &table);
  std::cout << "sampled (k = " << plan.k << "): " << s.best->estimate << " bits\n";
}

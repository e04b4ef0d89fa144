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

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qkc/estimator.hpp"
#include "qkc/random.hpp"

namespace qkc {

/// Trials per candidate so that, by a Chernoff and union bound over the
/// ~2^(2n) candidates, every estimate m/k is within a factor (1 +- epsilon)
/// of its q except with probability alpha:
///
///   k = ceil(6 (2n - log2 alpha + slack) / (epsilon^2 log2 e))
///
/// `slack` stands in for the unspecified additive constant and defaults to 0.
inline std::uint64_t k_from_bound(std::uint32_t n, double alpha, double epsilon, double slack = 0.0) {
  if (n == 0) throw UsageError("n must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) throw UsageError("alpha must lie in (0, 1)");
  if (!(epsilon > 0.0 && epsilon < 0.5)) throw UsageError("epsilon must lie in (0, 1/2)");
  const long double num = 6.0L * (2.0L * n - std::log2(static_cast<long double>(alpha)) + slack);
  const long double den = static_cast<long double>(epsilon) * epsilon * std::log2(std::exp(1.0L));
  const long double k = std::ceil(num / den);
  return k < 1 ? 1 : static_cast<std::uint64_t>(k);
}

struct SamplingPlan {
  double alpha = 0.05;
  double epsilon = 0.25;
  std::uint64_t k = 0;

  static SamplingPlan from_bound(std::uint32_t n, double alpha, double epsilon, double slack = 0.0) {
    return {alpha, epsilon, k_from_bound(n, alpha, epsilon, slack)};
  }
};

/// m successes out of k projective measurements for one program.
struct TrialResult {
  Program program;
  std::uint64_t m = 0;
  std::uint64_t k = 0;
  double estimate = INFINITY;  // l(p) - log2(m / ((1 + epsilon) k)); finite iff m > 0
};

inline double trial_estimate(std::size_t length, std::uint64_t m, std::uint64_t k, double epsilon) {
  if (m == 0) return INFINITY;
  return static_cast<double>(length) - std::log2(static_cast<double>(m)) +
         std::log2((1.0 + epsilon) * static_cast<double>(k));
}

struct SampledTraceEntry {
  std::uint64_t processed = 0;
  Program program;
  double estimate = 0.0;
};

struct SampledEstimate {
  std::uint32_t n = 0;
  std::size_t max_len = 0;
  SamplingPlan plan;
  std::uint64_t seed = 0;
  std::optional<TrialResult> best;  // empty: every candidate had m = 0
  std::vector<SampledTraceEntry> trace;
  std::uint64_t candidates = 0;
};

/// Success probability of one projective measurement of a program's output.
/// The default oracle tests for the target state: q = |<target|output>|^2.
using MeasurementOracle = std::function<Rational(const RunResult&)>;

inline MeasurementOracle projection_oracle(const StateVector& target) {
  return [target](const RunResult& r) { return fidelity(target, *r.output); };
}

/// Repeats each halting candidate's measurement k times and keeps the
/// candidate minimizing l(p) - log2(m / ((1 + epsilon) k)); equal estimates
/// go to the shorter program, then the smaller one. Each candidate draws
/// from its own stream seeded by (seed, enumeration position), so the result
/// does not depend on completion order.
template <class Source>
void sampled_search(Source& results, const MeasurementOracle& oracle, const SamplingPlan& plan, std::uint64_t seed,
                    SampledEstimate& est) {
  while (auto r = results.next()) {
    ++est.candidates;
    const double q = oracle(*r).get_d();
    Rng rng = make_rng(seed, r->sequence);
    std::uint64_t m = 0;
    for (std::uint64_t t = 0; t < plan.k; ++t) m += uniform01(rng) < q ? 1 : 0;
    TrialResult tr{r->program, m, plan.k, trial_estimate(r->program.length(), m, plan.k, plan.epsilon)};
    if (m == 0) continue;
    const bool improves = !est.best || tr.estimate < est.best->estimate ||
                          (tr.estimate == est.best->estimate &&
                           (tr.program.length() < est.best->program.length() ||
                            (tr.program.length() == est.best->program.length() && tr.program < est.best->program)));
    if (improves) {
      est.trace.push_back({est.candidates, tr.program, tr.estimate});
      est.best = std::move(tr);
    }
  }
}

/// Runs one result list through sampled_search; used for synthetic
/// candidate sets.
class VectorResultSource {
 public:
  explicit VectorResultSource(std::vector<RunResult> results) : results_(std::move(results)) {}
  std::optional<RunResult> next() {
    if (pos_ >= results_.size()) return std::nullopt;
    return results_[pos_++];
  }

 private:
  std::vector<RunResult> results_;
  std::size_t pos_ = 0;
};

inline SampledEstimate sampled_estimate(const StateVector& target, const SamplingPlan& plan, std::size_t max_len,
                                        std::uint64_t seed, const DecodedProgram* conditional = nullptr,
                                        const OutputTable* table = nullptr) {
  if (plan.k == 0) throw UsageError("sampling plan has k = 0");
  if (!(plan.epsilon > 0.0 && plan.epsilon < 0.5)) throw UsageError("epsilon must lie in (0, 1/2)");
  SampledEstimate est;
  est.n = target.n_qubits();
  est.max_len = max_len;
  est.plan = plan;
  est.seed = seed;
  const MeasurementOracle oracle = projection_oracle(target);
  if (table && !conditional && table->n == est.n && table->max_len >= max_len) {
    std::vector<RunResult> rs;
    for (const auto& r : table->entries)
      if (r.program.length() <= max_len) rs.push_back(r);
    VectorResultSource src(std::move(rs));
    sampled_search(src, oracle, plan, seed, est);
  } else {
    Dovetailer dt(ProgramEnumerator(max_len, est.n), est.n, conditional);
    sampled_search(dt, oracle, plan, seed, est);
  }
  return est;
}

/// min over halting p of l(p) - log2 q_p with the true q (real valued);
/// the quantity the sampled estimate approximates.
inline std::optional<double> ideal_value(const StateVector& target, std::size_t max_len,
                                         const DecodedProgram* conditional = nullptr,
                                         const OutputTable* table = nullptr) {
  std::optional<double> best;
  for_each_halted(target.n_qubits(), max_len, conditional, table, [&](const RunResult& r) {
    const Rational q = fidelity(target, *r.output);
    if (sgn(q) == 0) return;
    const double v = static_cast<double>(r.program.length()) - log2_rational(q);
    if (!best || v < *best) best = v;
  });
  return best;
}

}  // namespace qkc

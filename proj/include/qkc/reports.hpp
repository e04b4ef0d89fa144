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

#include <sstream>
#include <string>

#include "qkc/census.hpp"
#include "qkc/sampling.hpp"
#include "qkc/serialize.hpp"

namespace qkc {

// JSON and CSV renderings of estimator and census results. Layouts are
// described in schema/*.schema.json.

inline Json gates_to_json(const Program& p, std::uint32_t n) {
  DecodeResult d = decode(p, n);
  return d.ok() ? Json(to_string(*d.program)) : Json(nullptr);
}

inline Json record_to_json(const EstimateRecord& r, std::uint32_t n) {
  return Json{{"program", program_to_json(r.program)},
              {"gates", gates_to_json(r.program, n)},
              {"length", r.length},
              {"fidelity", to_string(r.fidelity)},
              {"penalty", r.penalty},
              {"total", r.total}};
}

inline Json optional_record(const std::optional<EstimateRecord>& r, std::uint32_t n) {
  return r ? record_to_json(*r, n) : Json(nullptr);
}

inline Json exact_estimate_to_json(const ExactEstimate& e) {
  Json trace = Json::array();
  for (const auto& t : e.trace)
    trace.push_back({{"processed", t.processed}, {"program", program_to_json(t.program)}, {"total", t.total}});
  return Json{{"mode", "exact"},
              {"n", e.n},
              {"max_len", e.max_len},
              {"candidates", e.candidates},
              {"best", optional_record(e.best, e.n)},
              {"best_exact", optional_record(e.best_exact, e.n)},
              {"trace", std::move(trace)}};
}

inline Json sampled_estimate_to_json(const SampledEstimate& s) {
  Json trace = Json::array();
  for (const auto& t : s.trace)
    trace.push_back({{"processed", t.processed}, {"program", program_to_json(t.program)}, {"estimate", t.estimate}});
  Json best = nullptr;
  if (s.best)
    best = Json{{"program", program_to_json(s.best->program)},
                {"gates", gates_to_json(s.best->program, s.n)},
                {"length", s.best->program.length()},
                {"m", s.best->m},
                {"k", s.best->k},
                {"estimate", s.best->estimate}};
  return Json{{"mode", "sampled"},
              {"n", s.n},
              {"max_len", s.max_len},
              {"alpha", s.plan.alpha},
              {"epsilon", s.plan.epsilon},
              {"k", s.plan.k},
              {"seed", s.seed},
              {"candidates", s.candidates},
              {"best", std::move(best)},
              {"trace", std::move(trace)}};
}

inline Json total_or_null(const ExactEstimate& e) { return e.best ? Json(e.best->total) : Json(nullptr); }

inline Json census_to_json(const CensusReport& r) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.estimates.size(); ++i)
    rows.push_back({{"index", i},
                    {"best", optional_record(r.estimates[i].best, r.n)},
                    {"below", below_threshold(r.estimates[i], r.n, r.c)}});
  return Json{{"n", r.n},         {"c", r.c},
              {"max_len", r.max_len}, {"basis", r.basis_name},
              {"vectors", std::move(rows)}, {"count_below", r.count_below},
              {"bound", to_string(r.bound)}, {"verdict", r.verdict}};
}

inline std::string census_to_csv(const CensusReport& r) {
  std::ostringstream os;
  os << "index,program_len,program_hex,fidelity,penalty,total,below\n";
  for (std::size_t i = 0; i < r.estimates.size(); ++i) {
    const auto& b = r.estimates[i].best;
    os << i << ',';
    if (b) os << b->length << ',' << b->program.to_hex() << ',' << to_string(b->fidelity) << ',' << b->penalty << ',' << b->total;
    else os << ",,,,";
    os << ',' << (below_threshold(r.estimates[i], r.n, r.c) ? "true" : "false") << '\n';
  }
  return os.str();
}

inline Json consistency_to_json(const ConsistencyReport& r) {
  const auto n = r.estimate.n;
  return Json{{"bits", r.bits},
              {"max_len", r.max_len},
              {"estimate", optional_record(r.estimate.best, n)},
              {"exact_program", r.exact_program ? program_to_json(*r.exact_program) : Json(nullptr)},
              {"A", total_or_null(r.estimate)},
              {"B", r.exact_length() ? Json(*r.exact_length()) : Json(nullptr)},
              {"gap", r.gap ? Json(*r.gap) : Json(nullptr)}};
}

inline std::string consistency_to_csv(const std::vector<ConsistencyReport>& rows) {
  std::ostringstream os;
  os << "bits,A,B,gap\n";
  for (const auto& r : rows) {
    os << r.bits << ',';
    if (r.estimate.best) os << r.estimate.best->total;
    os << ',';
    if (r.exact_length()) os << *r.exact_length();
    os << ',';
    if (r.gap) os << *r.gap;
    os << '\n';
  }
  return os.str();
}

inline Json subadditivity_to_json(const SubadditivityReport& r) {
  return Json{{"p_x", program_to_json(r.p_x)},
              {"p_y", program_to_json(r.p_y)},
              {"n", r.n},
              {"max_len", r.max_len},
              {"joint", optional_record(r.joint.best, 2 * r.n)},
              {"x_given_y", optional_record(r.x_given_y.best, r.n)},
              {"y", optional_record(r.y.best, r.n)},
              {"concatenation", r.concatenation ? program_to_json(*r.concatenation) : Json(nullptr)},
              {"conclusive", r.conclusive},
              {"slack", r.slack ? Json(*r.slack) : Json(nullptr)}};
}

inline std::string subadditivity_to_csv(const SubadditivityReport& r) {
  std::ostringstream os;
  os << "p_x,p_y,joint,x_given_y,y,conclusive,slack\n";
  os << r.p_x.bits() << ',' << r.p_y.bits() << ',';
  if (r.joint.best) os << r.joint.best->total;
  os << ',';
  if (r.x_given_y.best) os << r.x_given_y.best->total;
  os << ',';
  if (r.y.best) os << r.y.best->total;
  os << ',' << (r.conclusive ? "true" : "false") << ',';
  if (r.slack) os << *r.slack;
  os << '\n';
  return os.str();
}

inline Json joint_bound_to_json(const JointBoundReport& r) {
  return Json{{"p_x", program_to_json(r.p_x)},
              {"p_y", program_to_json(r.p_y)},
              {"n", r.n},
              {"max_len", r.max_len},
              {"mutual_fidelity", to_string(r.mutual_fidelity)},
              {"applicable", r.applicable},
              {"lhs", r.applicable ? total_or_null(r.joint) : Json(nullptr)},
              {"rhs", r.rhs ? Json(*r.rhs) : Json(nullptr)},
              {"slack", r.slack ? Json(*r.slack) : Json(nullptr)}};
}

inline Json superposed_to_json(const SuperposedBitExample& ex) {
  return Json{{"bits", ex.bits},
              {"position", ex.position},
              {"max_len", ex.max_len},
              {"target", state_to_json(ex.target)},
              {"fidelity_bit0", to_string(ex.fidelity_bit0)},
              {"fidelity_bit1", to_string(ex.fidelity_bit1)},
              {"rotated", optional_record(ex.rotated.best, ex.target.n_qubits())},
              {"classical", optional_record(ex.classical.best, ex.target.n_qubits())},
              {"rot_program_length", ex.rot_program_length},
              {"bound_applicable", ex.bound_applicable},
              {"bound_holds", ex.bound_holds}};
}

}  // namespace qkc

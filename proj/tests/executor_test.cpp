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

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "qkc/cache.hpp"
#include "qkc/dovetail.hpp"
#include "qkc/enumerate.hpp"
#include "qkc/executor.hpp"

using namespace qkc;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  const char* base = std::getenv("QKC_TEST_TMP");
  auto dir = std::filesystem::path(base ? base : std::filesystem::temp_directory_path().string()) / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string serialize(const RunResult& r) {
  return detail::cache_record(r).dump();
}

}  // namespace

TEST(Run, empty_program_outputs_zero_state) {
  const RunResult r = run(Program("1"), 2);
  ASSERT_TRUE(r.halted());
  EXPECT_EQ(*r.output, StateVector::zero(2));
  EXPECT_EQ(r.steps, 0u);
}

TEST(Run, rot_program) {
  const RunResult r = run(encode(std::vector<Gate>{Gate::rot(0)}, 1), 1);
  ASSERT_TRUE(r.halted());
  EXPECT_EQ((*r.output)[0], GaussianRational(Rational(3, 5)));
  EXPECT_EQ((*r.output)[1], GaussianRational(Rational(4, 5)));
}

TEST(Run, callc_inlines_the_conditional) {
  const DecodedProgram cond{{Gate::x(0)}};
  const Program p = encode(std::vector<Instruction>{CallConditional{}}, 1);
  const RunResult r = run(p, 1, &cond);
  ASSERT_TRUE(r.halted());
  EXPECT_EQ(*r.output, StateVector::basis_state(1, 1));
  EXPECT_EQ(r.steps, 1u);

  const DecodedProgram two{{Gate::rot(0), Gate::x(0)}};
  const Program pp = encode(std::vector<Instruction>{CallConditional{}, Gate::phase(0), CallConditional{}}, 1);
  EXPECT_EQ(run(pp, 1, &two).steps, 5u);
}

TEST(Run, callc_without_conditional_fails) {
  const Program p = encode(std::vector<Instruction>{CallConditional{}}, 1);
  const RunResult r = run(p, 1);
  EXPECT_EQ(r.status, RunStatus::kDecodeFailed);
  EXPECT_FALSE(r.output.has_value());
}

TEST(Run, decode_failure_is_non_halting) {
  EXPECT_EQ(run(Program("0101010"), 2).status, RunStatus::kDecodeFailed);
  EXPECT_EQ(run(Program("11"), 2).status, RunStatus::kDecodeFailed);
}

TEST(Run, nested_call_in_conditional_is_rejected) {
  EXPECT_THROW(decode_conditional(encode(std::vector<Instruction>{CallConditional{}}, 1), 1), UsageError);
}

TEST(Dovetail, empty_stream) {
  Dovetailer dt(VectorProgramSource({}), 2);
  EXPECT_FALSE(dt.next().has_value());
}

TEST(Dovetail, same_outputs_as_sequential_runs) {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    for (std::size_t max_len : {7u, 12u, 16u}) {
      std::multiset<std::string> sequential, dovetailed;
      std::size_t idx = 0;
      ProgramEnumerator e(max_len, n);
      while (auto p = e.next()) {
        RunResult r = run(*p, n);
        r.sequence = idx++;
        if (r.halted()) sequential.insert(serialize(r));
      }
      Dovetailer dt(ProgramEnumerator(max_len, n), n);
      std::set<Program> seen;
      while (auto r = dt.next()) {
        EXPECT_TRUE(seen.insert(r->program).second) << "emitted twice";
        dovetailed.insert(serialize(*r));
      }
      EXPECT_EQ(sequential, dovetailed) << "n=" << n << " max_len=" << max_len;
    }
  }
}

TEST(Dovetail, stage_arithmetic) {
  // Twenty programs of 30 gates each: none halts within 12 stages.
  std::vector<Program> progs;
  for (int i = 0; i < 20; ++i) progs.push_back(encode(std::vector<Gate>(30, Gate::rot(0)), 1));
  Dovetailer dt(VectorProgramSource(progs), 1, nullptr, std::uint64_t{78});  // 1 + 2 + ... + 12
  EXPECT_FALSE(dt.next().has_value());
  EXPECT_TRUE(dt.budget_exhausted());
  const std::uint64_t k = dt.stage();
  EXPECT_EQ(k, 13u);  // the 13th stage found the budget spent
  for (std::int64_t j = 1; j <= 20; ++j)
    EXPECT_EQ(static_cast<std::int64_t>(dt.steps_received(j)), std::max<std::int64_t>(0, 12 - j + 1)) << j;
  // p_13 was admitted by the 13th stage before the budget check stopped it.
  EXPECT_EQ(dt.unfinished().size(), 13u);
}

TEST(Dovetail, completion_order_follows_the_schedule) {
  // p1 has 3 gates, p2 has none: p2 halts in stage 2 at its first step,
  // p1 halts in stage 3 on its third step.
  std::vector<Program> progs{encode(std::vector<Gate>(3, Gate::x(0)), 1), Program("1")};
  Dovetailer dt(VectorProgramSource(progs), 1);
  auto a = dt.next();
  ASSERT_TRUE(a);
  EXPECT_EQ(a->program, Program("1"));
  EXPECT_EQ(dt.stage(), 2u);
  auto b = dt.next();
  ASSERT_TRUE(b);
  EXPECT_EQ(b->steps, 3u);
  EXPECT_EQ(dt.stage(), 3u);
  EXPECT_FALSE(dt.next());
}

TEST(Dovetail, decode_failures_are_counted_not_emitted) {
  Dovetailer dt(VectorProgramSource({Program("0101010"), Program("1")}), 2);
  std::size_t emitted = 0;
  while (dt.next()) ++emitted;
  EXPECT_EQ(emitted, 1u);
  EXPECT_EQ(dt.decode_failures(), 1u);
}

TEST(Cache, warm_call_performs_no_simulation_and_matches) {
  const auto dir = scratch_dir("cache_warm");
  const CacheLoad cold = cached_outputs(2, 12, dir);
  EXPECT_FALSE(cold.hit);
  EXPECT_GT(cold.simulations, 0u);
  const CacheLoad warm = cached_outputs(2, 12, dir);
  EXPECT_TRUE(warm.hit);
  EXPECT_EQ(warm.simulations, 0u);
  const OutputTable fresh = compute_outputs(2, 12);
  ASSERT_EQ(warm.table.entries.size(), fresh.entries.size());
  for (std::size_t i = 0; i < fresh.entries.size(); ++i) {
    EXPECT_EQ(warm.table.entries[i].program, fresh.entries[i].program);
    EXPECT_EQ(*warm.table.entries[i].output, *fresh.entries[i].output);
    EXPECT_EQ(warm.table.entries[i].steps, fresh.entries[i].steps);
  }
}

TEST(Cache, version_mismatch_forces_recompute) {
  const auto dir = scratch_dir("cache_version");
  cached_outputs(1, 10, dir);
  const auto file = cache_file(dir, 1, 10);
  std::ifstream in(file);
  std::string header, rest, line;
  std::getline(in, header);
  while (std::getline(in, line)) rest += line + "\n";
  in.close();
  Json h = Json::parse(header);
  h["version"] = "qkc-enc-0";
  std::ofstream(file) << h.dump() << "\n" << rest;
  const CacheLoad again = cached_outputs(1, 10, dir);
  EXPECT_FALSE(again.hit);
  EXPECT_GT(again.simulations, 0u);
  EXPECT_EQ(again.warnings.size(), 1u);
  EXPECT_TRUE(cached_outputs(1, 10, dir).hit);
}

TEST(Cache, corruption_forces_recompute_with_warning) {
  const auto dir = scratch_dir("cache_corrupt");
  cached_outputs(1, 12, dir);
  const auto file = cache_file(dir, 1, 12);
  std::string text;
  {
    std::ifstream in(file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const auto pos = text.find("\"3\"");
  ASSERT_NE(pos, std::string::npos);
  text[pos + 1] = '7';
  std::ofstream(file) << text;
  const CacheLoad again = cached_outputs(1, 12, dir);
  EXPECT_FALSE(again.hit);
  ASSERT_EQ(again.warnings.size(), 1u);
  EXPECT_NE(again.warnings[0].find("corrupt"), std::string::npos);
}

TEST(Cache, files_are_byte_identical_across_runs) {
  const auto a = scratch_dir("cache_det_a"), b = scratch_dir("cache_det_b");
  cached_outputs(3, 14, a);
  cached_outputs(3, 14, b);
  std::ifstream fa(cache_file(a, 3, 14)), fb(cache_file(b, 3, 14));
  const std::string sa((std::istreambuf_iterator<char>(fa)), {}), sb((std::istreambuf_iterator<char>(fb)), {});
  EXPECT_FALSE(sa.empty());
  EXPECT_EQ(sa, sb);
}

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

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "qkc/qkc.hpp"

using namespace qkc;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "qkc-reports-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Serialize, content_hash_matches_fnv1a_vectors) {
  // Published FNV-1a 64-bit test vectors.
  EXPECT_EQ(content_hash(""), "cbf29ce484222325");
  EXPECT_EQ(content_hash("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(content_hash("foobar"), "85944171f73967e8");
}

TEST(Serialize, state_round_trip_is_exact) {
  Rng rng = make_rng(11);
  for (int i = 0; i < 20; ++i) {
    const StateVector s = random_rational_state(1 + i % 3, rng);
    const Json j = state_to_json(s);
    const StateVector back = state_from_json(Json::parse(j.dump()));
    ASSERT_EQ(back.n_qubits(), s.n_qubits());
    for (std::size_t k = 0; k < s.dimension(); ++k) EXPECT_EQ(back[k], s[k]);
  }
}

TEST(Serialize, state_layout) {
  const StateVector s = apply_gate(StateVector::zero(1), Gate::rot(0));
  EXPECT_EQ(state_to_json(s).dump(), R"({"n":1,"amps":[["3","5","0","1"],["4","5","0","1"]]})");
}

TEST(Serialize, malformed_state_is_a_usage_error) {
  EXPECT_THROW(state_from_json(Json::parse(R"({"n":1})")), UsageError);
  EXPECT_THROW(state_from_json(Json::parse(R"({"n":1,"amps":[["1","1","0"],["0","1","0","1"]]})")), UsageError);
  // not unit norm
  EXPECT_THROW(state_from_json(Json::parse(R"({"n":1,"amps":[["1","1","0","1"],["1","1","0","1"]]})")), UsageError);
  EXPECT_THROW(state_from_json(Json::parse(R"({"n":1,"amps":[["x","1","0","1"],["0","1","0","1"]]})")), UsageError);
}

TEST(Serialize, program_round_trip) {
  for (const auto& p : enumerate_programs(12, 2)) EXPECT_EQ(program_from_json(program_to_json(p)), p);
  EXPECT_THROW(program_from_json(Json::parse(R"({"len":3,"bits_hex":"f"})")), UsageError);
  EXPECT_THROW(program_from_json(Json::parse(R"({"bits_hex":"8"})")), UsageError);
}

TEST(Reports, exact_estimate_fields) {
  const auto e = exact_estimate(StateVector::classical("01"), 12);
  const Json j = exact_estimate_to_json(e);
  EXPECT_EQ(j["mode"], "exact");
  EXPECT_EQ(j["best"]["total"], 7);
  EXPECT_EQ(j["best"]["gates"], "X(1)");
  EXPECT_EQ(j["best"]["fidelity"], "1");
  EXPECT_EQ(j["best_exact"]["length"], 7);
  EXPECT_EQ(j["trace"].back()["total"], 7);
}

TEST(Reports, empty_estimate_serializes_null) {
  const auto e = exact_estimate(StateVector::classical("1"), 1);
  const Json j = exact_estimate_to_json(e);
  EXPECT_TRUE(j["best"].is_null());
  EXPECT_TRUE(j["trace"].empty());
}

TEST(Reports, census_csv_has_one_row_per_vector) {
  const auto r = incompressibility_census(2, 1, 12);
  const std::string csv = census_to_csv(r);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "index,program_len,program_hex,fidelity,penalty,total,below");
  const Json j = census_to_json(r);
  EXPECT_EQ(j["vectors"].size(), 4u);
  EXPECT_EQ(j["bound"], "2");
}

TEST(Reports, consistency_csv) {
  std::vector<ConsistencyReport> rows{consistency_report("0", 10), consistency_report("1", 10)};
  EXPECT_EQ(consistency_to_csv(rows), "bits,A,B,gap\n0,1,1,0\n1,7,7,0\n");
}

TEST(Reports, serialization_is_repeatable) {
  const auto a = census_to_json(incompressibility_census(2, 1, 12)).dump();
  const auto b = census_to_json(incompressibility_census(2, 1, 12)).dump();
  EXPECT_EQ(a, b);
}

TEST(Config, defaults) {
  const Json j = config_to_json(Config{});
  EXPECT_EQ(j.dump(),
            R"({"cache_dir":".qkc-cache","max_len":12,"n":2,"alpha":0.05,"epsilon":0.25,"seed":0,"format":"json","verbosity":0})");
}

TEST(Config, file_overrides_defaults) {
  const auto path = scratch("good.conf");
  std::ofstream(path) << "# comment\n max_len = 14 \nseed=9  # trailing\n\nformat = csv\nalpha = 0.1\n";
  Config cfg;
  load_config_file(cfg, path.string());
  EXPECT_EQ(cfg.max_len, 14u);
  EXPECT_EQ(cfg.seed, 9u);
  EXPECT_EQ(cfg.format, OutputFormat::kCsv);
  EXPECT_DOUBLE_EQ(cfg.alpha, 0.1);
  EXPECT_EQ(cfg.n, 2u);
}

TEST(Config, rejects_malformed_values) {
  Config cfg;
  EXPECT_THROW(apply_setting(cfg, "max_len", "12abc"), UsageError);
  EXPECT_THROW(apply_setting(cfg, "max_len", "-3"), UsageError);
  EXPECT_THROW(apply_setting(cfg, "seed", ""), UsageError);
  EXPECT_THROW(apply_setting(cfg, "alpha", "0.1x"), UsageError);
  EXPECT_THROW(apply_setting(cfg, "format", "xml"), UsageError);
  EXPECT_THROW(apply_setting(cfg, "colour", "red"), UsageError);
  EXPECT_EQ(cfg.max_len, 12u);

  const auto path = scratch("bad.conf");
  std::ofstream(path) << "max_len 12\n";
  EXPECT_THROW(load_config_file(cfg, path.string()), UsageError);
  EXPECT_THROW(load_config_file(cfg, (scratch("missing.conf")).string()), UsageError);
}

TEST(Config, environment_sets_cache_dir) {
  ::setenv("QKC_CACHE_DIR", "/tmp/elsewhere", 1);
  Config cfg;
  apply_environment(cfg);
  EXPECT_EQ(cfg.cache_dir, "/tmp/elsewhere");
  ::unsetenv("QKC_CACHE_DIR");
}

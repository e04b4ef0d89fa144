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

// qkc: command-line front end for the estimator and census experiments.
//
// Exit codes:
//   0  success
//   2  usage error (bad flags, malformed input, parameter out of range)
//   3  no finite estimate at this length bound
//   4  I/O failure

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qkc/qkc.hpp"

namespace {

using namespace qkc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNoEstimate = 3;
constexpr int kExitIo = 4;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config_file;
  std::optional<std::string> cache_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  std::optional<std::size_t> max_len;
  std::optional<std::uint32_t> n;
  std::optional<double> alpha;
  std::optional<double> epsilon;
  std::string out;
  std::string out_dir;
  bool no_cache = false;
  bool verbose = false;

  std::string classical, program, state_file, gates, cond_program, cond_gates;
  bool sampled = false;
  double slack = 0.0;
  std::uint32_t c = 1;
  bool rotated = false;
  std::uint64_t sweep = 0;
  std::string px, py;
  std::string bits;
  std::uint32_t position = 0;
};

Config effective_config(const Options& o) {
  Config cfg;
  if (!o.config_file.empty()) load_config_file(cfg, o.config_file);
  apply_environment(cfg);
  if (o.cache_dir) cfg.cache_dir = *o.cache_dir;
  if (o.seed) cfg.seed = *o.seed;
  if (o.format) apply_setting(cfg, "format", *o.format);
  if (o.max_len) cfg.max_len = *o.max_len;
  if (o.n) cfg.n = *o.n;
  if (o.alpha) cfg.alpha = *o.alpha;
  if (o.epsilon) cfg.epsilon = *o.epsilon;
  if (o.verbose) ++cfg.verbosity;
  if (cfg.n == 0 || cfg.n > 10) throw UsageError("--n must lie in [1, 10]");
  if (cfg.max_len == 0 || cfg.max_len > 40) throw UsageError("--max-len must lie in [1, 40]");
  return cfg;
}

Json envelope(const std::string& command, const Config& cfg, Json result) {
  return Json{{"schema_version", kSchemaVersion},
              {"encoding_version", kEncodingVersion},
              {"command", command},
              {"config", config_to_json(cfg)},
              {"result", std::move(result)}};
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream f(path, std::ios::trunc);
  if (!f || !(f << text)) throw IoError("cannot write " + path.string());
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) std::cout << text;
  else write_file(o.out, text);
}

/// Writes a report and its reproducibility manifest into the output
/// directory and echoes the report on stdout (or --out).
void emit_report(const Options& o, const Config& cfg, const std::string& command, const std::string& stem,
                 const std::string& body) {
  const std::filesystem::path dir = o.out_dir.empty() ? "qkc-reports" : o.out_dir;
  const std::string base = stem + "-" + std::string(kEncodingVersion);
  const std::string name = base + (cfg.format == OutputFormat::kCsv ? ".csv" : ".json");
  write_file(dir / name, body);
  const Json manifest{{"schema_version", kSchemaVersion},
                      {"encoding_version", kEncodingVersion},
                      {"command", command},
                      {"config", config_to_json(cfg)},
                      {"seeds", Json::array({cfg.seed})},
                      {"report", name}};
  write_file(dir / (base + ".manifest.json"), manifest.dump(2) + "\n");
  emit(o, body);
}

/// "HEX", whose length is fixed by the self-delimiting header, or "LEN:HEX".
Program parse_program(const std::string& text, std::uint32_t n) {
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    std::size_t len = 0;
    try {
      len = std::stoul(text.substr(0, colon));
    } catch (const std::exception&) {
      throw UsageError("malformed program length in '" + text + "'");
    }
    return Program::from_hex(len, text.substr(colon + 1));
  }
  const Program padded = Program::from_hex(text.size() * 4, text);
  const DecodeResult d = decode(padded, n, {.consume_exactly = false});
  if (!d.ok()) throw UsageError(std::string("program does not decode: ") + to_string(d.error));
  if (padded.length() - d.consumed >= 4 || padded.bits().find('1', d.consumed) != std::string::npos)
    throw UsageError("program has bits beyond its encoded length");
  return Program(padded.bits().substr(0, d.consumed));
}

StateVector read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError("malformed state file " + path + ": " + e.what());
  }
  return state_from_json(j);
}

std::vector<Gate> gate_list(const std::string& text) {
  std::vector<Gate> gates;
  for (const auto& ins : parse_instructions(text)) {
    if (!std::holds_alternative<Gate>(ins)) throw UsageError("CALLC is not allowed here");
    gates.push_back(std::get<Gate>(ins));
  }
  return gates;
}

std::optional<OutputTable> load_table(const Options& o, const Config& cfg, std::uint32_t n) {
  if (o.no_cache) return std::nullopt;
  CacheLoad load = cached_outputs(n, cfg.max_len, cfg.cache_dir);
  for (const auto& w : load.warnings) std::cerr << "warning: " << w << "\n";
  if (cfg.verbosity > 0)
    std::cerr << "cache " << (load.hit ? "hit" : "miss") << ", " << load.simulations << " simulations\n";
  return std::move(load.table);
}

const OutputTable* ptr(const std::optional<OutputTable>& t) { return t ? &*t : nullptr; }

// ---------------------------------------------------------------------------

int cmd_estimate(const Options& o) {
  const Config cfg = effective_config(o);
  const int sources = !o.classical.empty() + !o.program.empty() + !o.state_file.empty() + !o.gates.empty();
  if (sources != 1) throw UsageError("give exactly one of --classical, --program, --gates, --state");

  std::optional<StateVector> target;
  if (!o.classical.empty()) {
    target = StateVector::classical(o.classical);
  } else if (!o.state_file.empty()) {
    target = read_state_file(o.state_file);
  } else {
    const Program p = o.program.empty() ? encode(parse_instructions(o.gates), cfg.n) : parse_program(o.program, cfg.n);
    const RunResult r = run(p, cfg.n);
    if (!r.halted()) throw UsageError("target program does not halt without a conditional");
    target = *r.output;
  }
  if (target->n_qubits() != cfg.n)
    throw UsageError("target has " + std::to_string(target->n_qubits()) + " qubits but --n is " + std::to_string(cfg.n));

  std::optional<DecodedProgram> cond;
  if (!o.cond_program.empty()) cond = decode_conditional(parse_program(o.cond_program, cfg.n), cfg.n);
  if (!o.cond_gates.empty()) {
    if (cond) throw UsageError("give at most one conditional");
    cond = decode_conditional(encode(parse_instructions(o.cond_gates), cfg.n), cfg.n);
  }
  const DecodedProgram* cp = cond ? &*cond : nullptr;
  const auto table = cond ? std::nullopt : load_table(o, cfg, cfg.n);

  Json result;
  bool finite = false;
  if (o.sampled) {
    const SamplingPlan plan = SamplingPlan::from_bound(cfg.n, cfg.alpha, cfg.epsilon, o.slack);
    const SampledEstimate s = sampled_estimate(*target, plan, cfg.max_len, cfg.seed, cp, ptr(table));
    finite = s.best.has_value();
    result = sampled_estimate_to_json(s);
  } else {
    const ExactEstimate e = exact_estimate(*target, cfg.max_len, cp, ptr(table));
    finite = e.best.has_value();
    result = exact_estimate_to_json(e);
  }
  result["target"] = state_to_json(*target);
  result["conditional"] = cond ? Json(to_string(*cond)) : Json(nullptr);
  emit(o, envelope("estimate", cfg, std::move(result)).dump(2) + "\n");
  if (!finite) {
    std::cerr << "no finite estimate at max_len " << cfg.max_len << "\n";
    return kExitNoEstimate;
  }
  return kExitOk;
}

int cmd_census(const Options& o) {
  const Config cfg = effective_config(o);
  if (o.c == 0) throw UsageError("--c must be at least 1");
  const auto table = load_table(o, cfg, cfg.n);
  const Basis basis = o.rotated ? Basis::rotated(cfg.n, default_rotation_circuit(cfg.n)) : Basis::standard(cfg.n);
  const CensusReport r =
      incompressibility_census(basis, o.c, cfg.max_len, o.rotated ? "rotated" : "standard", ptr(table));
  const std::string stem = "census-" + r.basis_name + "-n" + std::to_string(cfg.n) + "-c" + std::to_string(o.c) +
                           "-L" + std::to_string(cfg.max_len);
  std::string body;
  if (cfg.format == OutputFormat::kCsv) {
    body = census_to_csv(r);
  } else {
    Json result = census_to_json(r);
    if (o.sweep > 0) {
      const UniformSweep s = uniform_sweep(cfg.n, o.c, cfg.max_len, o.sweep, cfg.seed, ptr(table));
      result["sweep"] = {{"samples", s.samples}, {"seed", s.seed}, {"at_least", s.at_least}, {"fraction", s.fraction()}};
    }
    body = envelope("census", cfg, std::move(result)).dump(2) + "\n";
  }
  emit_report(o, cfg, "census", stem, body);
  return kExitOk;
}

int cmd_consistency(const Options& o) {
  const Config cfg = effective_config(o);
  if (cfg.n > 4) throw UsageError("consistency sweeps are limited to n <= 4");
  const auto table = load_table(o, cfg, cfg.n);
  std::vector<ConsistencyReport> rows;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << cfg.n); ++v) {
    std::string bits;
    for (std::uint32_t q = 0; q < cfg.n; ++q) bits.push_back(((v >> (cfg.n - 1 - q)) & 1) ? '1' : '0');
    rows.push_back(consistency_report(bits, cfg.max_len, ptr(table)));
  }
  std::optional<std::int64_t> max_gap;
  for (const auto& r : rows)
    if (r.gap && (!max_gap || *r.gap > *max_gap)) max_gap = r.gap;
  const std::string stem = "consistency-n" + std::to_string(cfg.n) + "-L" + std::to_string(cfg.max_len);
  std::string body;
  if (cfg.format == OutputFormat::kCsv) {
    body = consistency_to_csv(rows);
  } else {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(consistency_to_json(r));
    body = envelope("consistency", cfg, Json{{"rows", std::move(arr)}, {"max_gap", max_gap ? Json(*max_gap) : Json(nullptr)}})
               .dump(2) +
           "\n";
  }
  emit_report(o, cfg, "consistency", stem, body);
  return kExitOk;
}

std::pair<Program, Program> pair_args(const Options& o, const Config& cfg) {
  if (o.px.empty() || o.py.empty()) throw UsageError("--px and --py are required");
  return {parse_program(o.px, cfg.n), parse_program(o.py, cfg.n)};
}

int cmd_subadd(const Options& o) {
  const Config cfg = effective_config(o);
  const auto [px, py] = pair_args(o, cfg);
  const auto single = load_table(o, cfg, cfg.n);
  const auto joint = load_table(o, cfg, 2 * cfg.n);
  const SubadditivityReport r = subadditivity_report(px, py, cfg.n, cfg.max_len, ptr(joint), ptr(single));
  const std::string stem = "subadd-" + px.to_hex() + "-" + py.to_hex() + "-n" + std::to_string(cfg.n) + "-L" +
                           std::to_string(cfg.max_len);
  const std::string body = cfg.format == OutputFormat::kCsv
                               ? subadditivity_to_csv(r)
                               : envelope("subadd", cfg, subadditivity_to_json(r)).dump(2) + "\n";
  emit_report(o, cfg, "subadd", stem, body);
  return kExitOk;
}

int cmd_jointbound(const Options& o) {
  const Config cfg = effective_config(o);
  const auto [px, py] = pair_args(o, cfg);
  const auto single = load_table(o, cfg, cfg.n);
  const auto joint = load_table(o, cfg, 2 * cfg.n);
  const JointBoundReport r = joint_bound_report(px, py, cfg.n, cfg.max_len, ptr(joint), ptr(single));
  emit(o, envelope("jointbound", cfg, joint_bound_to_json(r)).dump(2) + "\n");
  return kExitOk;
}

int cmd_example(const Options& o) {
  Options local = o;
  if (!o.bits.empty()) local.n = static_cast<std::uint32_t>(o.bits.size());
  const Config cfg = effective_config(local);
  const std::string bits = o.bits.empty() ? std::string(cfg.n, '0') : o.bits;
  const auto table = load_table(o, cfg, cfg.n);
  const SuperposedBitExample ex = superposed_bit_example(bits, o.position, cfg.max_len, ptr(table));
  emit(o, envelope("example", cfg, superposed_to_json(ex)).dump(2) + "\n");
  return kExitOk;
}

int cmd_encode(const Options& o) {
  const Config cfg = effective_config(o);
  const Program p = encode(parse_instructions(o.gates), cfg.n);
  Json j = program_to_json(p);
  j["bits"] = p.bits();
  emit(o, envelope("encode", cfg, std::move(j)).dump(2) + "\n");
  return kExitOk;
}

int cmd_decode(const Options& o) {
  const Config cfg = effective_config(o);
  if (o.bits.empty() == o.program.empty()) throw UsageError("give exactly one of --bits, --program");
  const Program p = o.bits.empty() ? parse_program(o.program, cfg.n) : Program(o.bits);
  const DecodeResult d = decode(p, cfg.n);
  if (!d.ok()) throw UsageError(std::string("decode failed: ") + to_string(d.error));
  Json j = program_to_json(p);
  j["bits"] = p.bits();
  j["gates"] = to_string(*d.program);
  j["gate_count"] = d.program->gate_count();
  emit(o, envelope("decode", cfg, std::move(j)).dump(2) + "\n");
  return kExitOk;
}

int cmd_enumerate(const Options& o) {
  const Config cfg = effective_config(o);
  std::ostringstream os;
  ProgramEnumerator e(cfg.max_len, cfg.n);
  while (auto p = e.next()) {
    const auto d = decode(*p, cfg.n);
    if (cfg.format == OutputFormat::kCsv) {
      os << p->length() << ',' << p->to_hex() << ',' << p->bits() << ',' << '"' << to_string(*d.program) << '"' << '\n';
    } else {
      Json j = program_to_json(*p);
      j["bits"] = p->bits();
      j["gates"] = to_string(*d.program);
      os << j.dump() << '\n';
    }
  }
  emit(o, os.str());
  return kExitOk;
}

int cmd_kplan(const Options& o) {
  const Config cfg = effective_config(o);
  const std::uint64_t k = k_from_bound(cfg.n, cfg.alpha, cfg.epsilon, o.slack);
  emit(o, envelope("kplan", cfg, Json{{"n", cfg.n}, {"alpha", cfg.alpha}, {"epsilon", cfg.epsilon}, {"slack", o.slack}, {"k", k}})
                  .dump(2) +
              "\n");
  return kExitOk;
}

int cmd_shannon_fano(const Options& o) {
  const Config cfg = effective_config(o);
  if (o.state_file.empty() == o.gates.empty()) throw UsageError("give exactly one of --state, --gates");
  const StateVector z =
      o.state_file.empty() ? apply_gates(StateVector::zero(cfg.n), gate_list(o.gates)) : read_state_file(o.state_file);
  const Basis basis = Basis::standard(z.n_qubits());
  const auto lengths = shannon_fano_lengths(basis, z);
  const auto code = shannon_fano_code(basis, z);
  Json rows = Json::array();
  for (std::size_t i = 0; i < basis.size(); ++i)
    rows.push_back({{"index", i},
                    {"fidelity", to_string(fidelity(basis[i], z))},
                    {"length", lengths[i] ? Json(*lengths[i]) : Json(nullptr)},
                    {"codeword", code[i] ? Json(*code[i]) : Json(nullptr)}});
  emit(o, envelope("shannon-fano", cfg, Json{{"state", state_to_json(z)}, {"outcomes", std::move(rows)}}).dump(2) + "\n");
  return kExitOk;
}

int cmd_warm(const Options& o) {
  const Config cfg = effective_config(o);
  const CacheLoad load = cached_outputs(cfg.n, cfg.max_len, cfg.cache_dir);
  for (const auto& w : load.warnings) std::cerr << "warning: " << w << "\n";
  emit(o, envelope("warm-cache", cfg,
                   Json{{"file", cache_file(cfg.cache_dir, cfg.n, cfg.max_len).string()},
                        {"entries", load.table.entries.size()}})
                  .dump(2) +
              "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qkc: length-bounded quantum Kolmogorov complexity on a fixed rational gate machine"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool with_len = true) {
    sub->add_option("--config", o.config_file, "key = value configuration file");
    sub->add_option("--cache-dir", o.cache_dir, "output cache directory (env QKC_CACHE_DIR)");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--format", o.format, "json or csv");
    sub->add_option("--n", o.n, "qubit count (the conditional n)");
    if (with_len) sub->add_option("--max-len", o.max_len, "program length bound in bits");
    sub->add_option("--out", o.out, "write output to this file instead of stdout");
    sub->add_option("--out-dir", o.out_dir, "report directory for census, consistency, subadd (default qkc-reports)");
    sub->add_flag("-v,--verbose", o.verbose, "report cache activity on stderr");
  };

  auto* estimate = app.add_subcommand("estimate", "estimate K(target | n) by enumeration");
  common(estimate);
  estimate->add_option("--classical", o.classical, "classical bit string target");
  estimate->add_option("--program", o.program, "target prepared by this program (HEX or LEN:HEX)");
  estimate->add_option("--gates", o.gates, "target prepared by this gate list, e.g. \"X(0),ROT(1)\"");
  estimate->add_option("--state", o.state_file, "target amplitudes as a state JSON file");
  estimate->add_option("--conditional", o.cond_program, "conditional program (HEX or LEN:HEX)");
  estimate->add_option("--conditional-gates", o.cond_gates, "conditional program as a gate list");
  estimate->add_flag("--sampled", o.sampled, "use the measurement-sampling estimator");
  estimate->add_option("--alpha", o.alpha, "error probability for --sampled");
  estimate->add_option("--epsilon", o.epsilon, "relative accuracy for --sampled");
  estimate->add_option("--slack", o.slack, "additive constant in the trial-count bound");
  estimate->add_flag("--no-cache", o.no_cache, "do not read or write the output cache");

  auto* census = app.add_subcommand("census", "incompressibility census over a basis");
  common(census);
  census->add_option("--c", o.c, "deficiency c in the threshold n - c");
  census->add_flag("--rotated", o.rotated, "use the ROT/CNOT-rotated basis");
  census->add_option("--sweep", o.sweep, "also sample this many random rational states");
  census->add_flag("--no-cache", o.no_cache, "do not read or write the output cache");

  auto* consistency = app.add_subcommand("consistency", "penalized vs exact descriptions of classical strings");
  common(consistency);
  consistency->add_flag("--no-cache", o.no_cache, "do not read or write the output cache");

  auto* subadd = app.add_subcommand("subadd", "sub-additivity report for two programs");
  common(subadd);
  subadd->add_option("--px", o.px, "program for x (HEX or LEN:HEX)");
  subadd->add_option("--py", o.py, "program for y (HEX or LEN:HEX)");
  subadd->add_flag("--no-cache", o.no_cache, "do not read or write the output cache");

  auto* joint = app.add_subcommand("jointbound", "K(x,y) against K(y) - log2 |<x|y>|^2");
  common(joint);
  joint->add_option("--px", o.px, "program for x (HEX or LEN:HEX)");
  joint->add_option("--py", o.py, "program for y (HEX or LEN:HEX)");
  joint->add_flag("--no-cache", o.no_cache, "do not read or write the output cache");

  auto* example = app.add_subcommand("example", "classical string with one rotated position");
  common(example);
  example->add_option("--bits", o.bits, "classical string (default all zeros of length n)");
  example->add_option("--position", o.position, "position to rotate");
  example->add_flag("--no-cache", o.no_cache, "do not read or write the output cache");

  auto* enc = app.add_subcommand("encode", "encode a gate list");
  common(enc, false);
  enc->add_option("--gates", o.gates, "gate list, e.g. \"X(0),CNOT(0,1),CALLC\"")->required();

  auto* dec = app.add_subcommand("decode", "decode a program");
  common(dec, false);
  dec->add_option("--bits", o.bits, "program as a bit string");
  dec->add_option("--program", o.program, "program as HEX or LEN:HEX");

  auto* en = app.add_subcommand("enumerate", "list decodable programs in enumeration order");
  common(en);

  auto* kplan = app.add_subcommand("kplan", "trials per program for a sampling plan");
  common(kplan, false);
  kplan->add_option("--alpha", o.alpha, "error probability in (0, 1)");
  kplan->add_option("--epsilon", o.epsilon, "relative accuracy in (0, 1/2)");
  kplan->add_option("--slack", o.slack, "additive constant in the bound");

  auto* sf = app.add_subcommand("shannon-fano", "Shannon-Fano code of the standard basis given a state");
  common(sf, false);
  sf->add_option("--state", o.state_file, "state JSON file");
  sf->add_option("--gates", o.gates, "state prepared by this gate list");

  auto* warm = app.add_subcommand("warm-cache", "precompute the output table for (n, max_len)");
  common(warm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*estimate) return cmd_estimate(o);
    if (*census) return cmd_census(o);
    if (*consistency) return cmd_consistency(o);
    if (*subadd) return cmd_subadd(o);
    if (*joint) return cmd_jointbound(o);
    if (*example) return cmd_example(o);
    if (*enc) return cmd_encode(o);
    if (*dec) return cmd_decode(o);
    if (*en) return cmd_enumerate(o);
    if (*kplan) return cmd_kplan(o);
    if (*sf) return cmd_shannon_fano(o);
    if (*warm) return cmd_warm(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qkc/errors.hpp"
#include "qkc/gate.hpp"
#include "qkc/program.hpp"

namespace qkc {

// Program layout, for a register of n qubits:
//
//   gamma(count + 1)  instruction_1 ... instruction_count
//
// gamma(m) is the Elias-gamma code of m >= 1: (bitlen(m) - 1) zeros followed
// by m in binary. Each instruction is a 3-bit opcode followed by its qubit
// operands, each index_width(n) bits wide:
//
//   000 X      target
//   001 CNOT   control target
//   010 ROT    target
//   011 PHASE  target
//   100 CALLC  (no operands)
//   101..111   invalid
//
// The header fixes how many instructions follow and every opcode fixes its
// own width, so the decoder knows where the program ends without looking
// past it. Decoding requires that the input end exactly there.
inline constexpr std::string_view kEncodingVersion = "qkc-enc-1";

/// Invokes the conditional program inline on the same register.
struct CallConditional {
  friend bool operator==(const CallConditional&, const CallConditional&) { return true; }
};

using Instruction = std::variant<Gate, CallConditional>;

inline std::string to_string(const Instruction& ins) {
  if (const Gate* g = std::get_if<Gate>(&ins)) return to_string(*g);
  return "CALLC";
}

struct DecodedProgram {
  std::vector<Instruction> instructions;

  std::size_t gate_count() const { return instructions.size(); }

  /// Positions of CALLC opcodes within the instruction list.
  std::vector<std::size_t> call_sites() const {
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i < instructions.size(); ++i)
      if (std::holds_alternative<CallConditional>(instructions[i])) sites.push_back(i);
    return sites;
  }

  friend bool operator==(const DecodedProgram&, const DecodedProgram&) = default;
};

enum class DecodeError {
  kNone,
  kTruncated,
  kHeaderOverflow,
  kInvalidOpcode,
  kIndexOutOfRange,
  kControlEqualsTarget,
  kNestedCall,
  kTrailingBits,
};

inline const char* to_string(DecodeError e) {
  switch (e) {
    case DecodeError::kNone: return "none";
    case DecodeError::kTruncated: return "truncated";
    case DecodeError::kHeaderOverflow: return "header overflow";
    case DecodeError::kInvalidOpcode: return "invalid opcode";
    case DecodeError::kIndexOutOfRange: return "qubit index out of range";
    case DecodeError::kControlEqualsTarget: return "CNOT control equals target";
    case DecodeError::kNestedCall: return "CALLC not allowed here";
    case DecodeError::kTrailingBits: return "trailing bits";
  }
  return "?";
}

struct DecodeOptions {
  bool consume_exactly = true;
  bool allow_call = true;  // false when decoding a conditional program itself
};

struct DecodeResult {
  std::optional<DecodedProgram> program;
  DecodeError error = DecodeError::kNone;
  std::size_t consumed = 0;

  bool ok() const { return program.has_value(); }
};

/// Bits per qubit operand: ceil(log2 n), and 1 when n == 1.
inline std::uint32_t index_width(std::uint32_t n) {
  if (n == 0) throw UsageError("qubit count must be positive");
  std::uint32_t w = 0;
  while ((std::uint64_t{1} << w) < n) ++w;
  return w == 0 ? 1 : w;
}

namespace detail {

inline std::size_t gamma_length(std::uint64_t m) {
  std::size_t bits = 0;
  while (m >> bits) ++bits;
  return 2 * bits - 1;
}

inline void append_gamma(std::string& out, std::uint64_t m) {
  std::size_t bits = 0;
  while (m >> bits) ++bits;
  out.append(bits - 1, '0');
  for (std::size_t b = bits; b-- > 0;) out.push_back(((m >> b) & 1) ? '1' : '0');
}

inline void append_uint(std::string& out, std::uint64_t v, std::uint32_t width) {
  for (std::uint32_t b = width; b-- > 0;) out.push_back(((v >> b) & 1) ? '1' : '0');
}

}  // namespace detail

inline std::size_t instruction_bits(const Instruction& ins, std::uint32_t n) {
  const Gate* g = std::get_if<Gate>(&ins);
  if (!g) return 3;
  return 3 + (g->kind == GateKind::CNOT ? 2 : 1) * index_width(n);
}

inline std::string encode_instruction(const Instruction& ins, std::uint32_t n) {
  std::string out;
  const Gate* g = std::get_if<Gate>(&ins);
  if (!g) return "100";
  if (g->target >= n || (g->kind == GateKind::CNOT && g->control >= n))
    throw UsageError("qubit index of " + to_string(*g) + " overflows n = " + std::to_string(n));
  if (g->kind == GateKind::CNOT && g->control == g->target) throw UsageError("CNOT control equals target");
  const std::uint32_t w = index_width(n);
  detail::append_uint(out, static_cast<std::uint64_t>(g->kind), 3);
  if (g->kind == GateKind::CNOT) detail::append_uint(out, g->control, w);
  detail::append_uint(out, g->target, w);
  return out;
}

inline Program encode(std::span<const Instruction> instructions, std::uint32_t n) {
  std::string bits;
  detail::append_gamma(bits, instructions.size() + 1);
  for (const auto& ins : instructions) bits += encode_instruction(ins, n);
  return Program(std::move(bits));
}

inline Program encode(std::span<const Gate> gates, std::uint32_t n) {
  std::vector<Instruction> ins(gates.begin(), gates.end());
  return encode(ins, n);
}

inline DecodeResult decode(std::string_view bits, std::uint32_t n, DecodeOptions opts = {}) {
  DecodeResult r;
  std::size_t pos = 0;
  auto fail = [&](DecodeError e) {
    r.error = e;
    r.consumed = pos;
    return r;
  };
  auto read = [&](std::uint32_t width, std::uint64_t& v) {
    if (pos + width > bits.size()) return false;
    v = 0;
    for (std::uint32_t i = 0; i < width; ++i) v = (v << 1) | static_cast<std::uint64_t>(bits[pos + i] == '1');
    pos += width;
    return true;
  };

  std::size_t zeros = 0;
  while (pos < bits.size() && bits[pos] == '0') {
    ++zeros;
    ++pos;
  }
  if (pos == bits.size()) return fail(DecodeError::kTruncated);
  if (zeros > 40) return fail(DecodeError::kHeaderOverflow);
  std::uint64_t m = 0;
  if (!read(static_cast<std::uint32_t>(zeros + 1), m)) return fail(DecodeError::kTruncated);
  const std::uint64_t count = m - 1;

  const std::uint32_t w = index_width(n);
  DecodedProgram prog;
  for (std::uint64_t k = 0; k < count; ++k) {
    std::uint64_t op = 0;
    if (!read(3, op)) return fail(DecodeError::kTruncated);
    if (op > 4) return fail(DecodeError::kInvalidOpcode);
    if (op == 4) {
      if (!opts.allow_call) return fail(DecodeError::kNestedCall);
      prog.instructions.emplace_back(CallConditional{});
      continue;
    }
    const auto kind = static_cast<GateKind>(op);
    std::uint64_t control = 0, target = 0;
    if (kind == GateKind::CNOT && !read(w, control)) return fail(DecodeError::kTruncated);
    if (!read(w, target)) return fail(DecodeError::kTruncated);
    if (target >= n || control >= n) return fail(DecodeError::kIndexOutOfRange);
    if (kind == GateKind::CNOT && control == target) return fail(DecodeError::kControlEqualsTarget);
    prog.instructions.emplace_back(
        Gate{kind, static_cast<std::uint32_t>(target), static_cast<std::uint32_t>(control)});
  }
  if (opts.consume_exactly && pos != bits.size()) return fail(DecodeError::kTrailingBits);
  r.program = std::move(prog);
  r.consumed = pos;
  return r;
}

inline DecodeResult decode(const Program& p, std::uint32_t n, DecodeOptions opts = {}) {
  return decode(std::string_view(p.bits()), n, opts);
}

/// Decodes a program intended as a conditional; those may not call CALLC.
inline DecodedProgram decode_conditional(const Program& p, std::uint32_t n) {
  DecodeResult r = decode(p, n, {.consume_exactly = true, .allow_call = false});
  if (!r.ok()) throw UsageError(std::string("conditional program does not decode: ") + to_string(r.error));
  return std::move(*r.program);
}

/// Parses a comma-separated instruction list such as "X(0),CNOT(0,1),CALLC".
inline std::vector<Instruction> parse_instructions(std::string_view text) {
  std::vector<Instruction> out;
  std::string token;
  auto flush = [&] {
    std::string t;
    for (char c : token)
      if (c != ' ' && c != '\t') t.push_back(c);
    token.clear();
    if (t.empty()) return;
    if (t == "CALLC") {
      out.emplace_back(CallConditional{});
      return;
    }
    const auto open = t.find('(');
    if (open == std::string::npos || t.back() != ')') throw UsageError("malformed instruction '" + t + "'");
    const std::string name = t.substr(0, open);
    const std::string args = t.substr(open + 1, t.size() - open - 2);
    std::vector<std::uint32_t> idx;
    std::size_t start = 0;
    while (start <= args.size()) {
      const auto end = args.find(';', start);
      const std::string a = args.substr(start, end == std::string::npos ? std::string::npos : end - start);
      if (a.empty() || a.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("malformed operand in '" + t + "'");
      idx.push_back(static_cast<std::uint32_t>(std::stoul(a)));
      if (end == std::string::npos) break;
      start = end + 1;
    }
    if (name == "CNOT" && idx.size() == 2) out.emplace_back(Gate::cnot(idx[0], idx[1]));
    else if (name == "X" && idx.size() == 1) out.emplace_back(Gate::x(idx[0]));
    else if (name == "ROT" && idx.size() == 1) out.emplace_back(Gate::rot(idx[0]));
    else if (name == "PHASE" && idx.size() == 1) out.emplace_back(Gate::phase(idx[0]));
    else throw UsageError("unknown instruction '" + t + "'");
  };
  // Operand separators inside parentheses are rewritten to ';' so that ',' can
  // delimit instructions.
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush();
    } else {
      token.push_back(c == ',' ? ';' : c);
    }
  }
  flush();
  return out;
}

inline std::string to_string(const DecodedProgram& p) {
  std::string s;
  for (std::size_t i = 0; i < p.instructions.size(); ++i) {
    if (i) s += ",";
    s += to_string(p.instructions[i]);
  }
  return s;
}

}  // namespace qkc

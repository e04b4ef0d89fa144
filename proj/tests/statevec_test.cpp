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

#include <cmath>

#include "qkc/basis.hpp"
#include "qkc/random.hpp"
#include "qkc/shannon_fano.hpp"
#include "qkc/state_vector.hpp"

using namespace qkc;

namespace {

GaussianRational gr(long num, long den, long inum = 0, long iden = 1) {
  return {make_rational(num, den), make_rational(inum, iden)};
}

StateVector rot0() { return apply_gate(StateVector::zero(1), Gate::rot(0)); }

}  // namespace

TEST(GaussianRational, canonical_form) {
  GaussianRational a(Rational(6, 8), Rational(-2, 4));
  EXPECT_EQ(a, gr(3, 4, -1, 2));
  EXPECT_EQ(a.re().get_den(), 4);
  EXPECT_EQ(gr(1, 2, 1, 3) * gr(1, 2, -1, 3), gr(13, 36));
  EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1));
}

TEST(StateVector, rejects_non_unit_and_bad_dimension) {
  EXPECT_THROW(StateVector(1, {gr(1, 2), gr(1, 2)}), UsageError);
  EXPECT_THROW(StateVector(2, {gr(1, 1), gr(0, 1)}), UsageError);
  EXPECT_NO_THROW(StateVector(1, {gr(3, 5), gr(0, 1, 4, 5)}));
}

TEST(ApplyGate, rot_on_zero) {
  const StateVector s = rot0();
  EXPECT_EQ(s[0], gr(3, 5));
  EXPECT_EQ(s[1], gr(4, 5));
}

TEST(ApplyGate, x_on_zero) { EXPECT_EQ(apply_gate(StateVector::zero(1), Gate::x(0)), StateVector::basis_state(1, 1)); }

TEST(ApplyGate, rot_twice) {
  // [[3,-4],[4,3]]/5 applied to (3,4)/5: (9-16, 12+12)/25
  const StateVector s = apply_gate(rot0(), Gate::rot(0));
  EXPECT_EQ(s[0], gr(-7, 25));
  EXPECT_EQ(s[1], gr(24, 25));
}

TEST(ApplyGate, qubit_zero_is_most_significant) {
  const StateVector s = apply_gate(StateVector::zero(2), Gate::x(0));
  EXPECT_EQ(s, StateVector::classical("10"));
  EXPECT_EQ(s, StateVector::basis_state(2, 2));
}

TEST(ApplyGate, cnot_flips_target_when_control_set) {
  EXPECT_EQ(apply_gate(StateVector::classical("10"), Gate::cnot(0, 1)), StateVector::classical("11"));
  EXPECT_EQ(apply_gate(StateVector::classical("01"), Gate::cnot(0, 1)), StateVector::classical("01"));
  EXPECT_EQ(apply_gate(StateVector::classical("01"), Gate::cnot(1, 0)), StateVector::classical("11"));
}

TEST(ApplyGate, phase_multiplies_one_component_by_i) {
  const StateVector s = apply_gate(rot0(), Gate::phase(0));
  EXPECT_EQ(s[0], gr(3, 5));
  EXPECT_EQ(s[1], gr(0, 1, 4, 5));
}

TEST(ApplyGate, index_errors) {
  EXPECT_THROW(apply_gate(StateVector::zero(1), Gate::x(1)), UsageError);
  EXPECT_THROW(apply_gate(StateVector::zero(2), Gate::cnot(1, 1)), UsageError);
  EXPECT_THROW(apply_gate(StateVector::zero(2), Gate::cnot(2, 0)), UsageError);
}

TEST(ApplyGate, unitarity_and_known_algebra_on_random_states) {
  Rng rng = make_rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(uniform_below(rng, 3));
    const StateVector s = random_rational_state(n, rng, 4);
    for (int g = 0; g < 4; ++g) {
      const Gate gate = random_gate(n, rng);
      EXPECT_EQ(apply_gate(s, gate).norm2(), 1);
    }
    const std::uint32_t t = static_cast<std::uint32_t>(uniform_below(rng, n));
    EXPECT_EQ(apply_gate(apply_gate(s, Gate::x(t)), Gate::x(t)), s);
    StateVector p = s;
    for (int k = 0; k < 4; ++k) p = apply_gate(p, Gate::phase(t));
    EXPECT_EQ(p, s);
    if (n > 1) {
      const Gate c = Gate::cnot((t + 1) % n, t);
      EXPECT_EQ(apply_gate(apply_gate(s, c), c), s);
    }
  }
}

TEST(Fidelity, examples) {
  const StateVector z0 = StateVector::zero(1), z1 = StateVector::basis_state(1, 1);
  EXPECT_EQ(fidelity(z0, z0), 1);
  EXPECT_EQ(fidelity(z0, z1), 0);
  EXPECT_EQ(fidelity(z0, rot0()), Rational(9, 25));
  EXPECT_THROW(fidelity(z0, StateVector::zero(2)), UsageError);
}

TEST(Fidelity, symmetric_and_bounded) {
  Rng rng = make_rng(5);
  for (int i = 0; i < 40; ++i) {
    const StateVector a = random_rational_state(2, rng), b = random_rational_state(2, rng);
    const Rational f = fidelity(a, b);
    EXPECT_EQ(f, fidelity(b, a));
    EXPECT_GE(f, 0);
    EXPECT_LE(f, 1);
  }
}

TEST(PenaltyBits, examples) {
  EXPECT_EQ(penalty_bits(Rational(1)), 0u);
  EXPECT_EQ(penalty_bits(Rational(1, 4)), 2u);
  EXPECT_EQ(penalty_bits(Rational(9, 25)), 2u);  // 1/4 <= 9/25 < 1/2
  EXPECT_EQ(penalty_bits(Rational(16, 25)), 1u);
  EXPECT_EQ(penalty_bits(Rational(1, 2)), 1u);
  EXPECT_EQ(penalty_bits(Rational(0)), std::nullopt);
  EXPECT_THROW(penalty_bits(Rational(3, 2)), UsageError);
  EXPECT_THROW(penalty_bits(Rational(-1, 2)), UsageError);
}

TEST(PenaltyBits, agrees_with_floating_point_away_from_boundaries) {
  Rng rng = make_rng(99);
  int compared = 0;
  for (int i = 0; i < 5000; ++i) {
    const std::uint64_t den = 1 + uniform_below(rng, 1u << 30);
    const std::uint64_t num = 1 + uniform_below(rng, den);
    const Rational q(Integer(static_cast<unsigned long>(num)), Integer(static_cast<unsigned long>(den)));
    const double x = -std::log2(static_cast<double>(num) / static_cast<double>(den));
    if (std::abs(x - std::round(x)) < 0x1.0p-20) continue;
    ++compared;
    EXPECT_EQ(*penalty_bits(q), static_cast<std::uint64_t>(std::max(0.0, std::ceil(x))));
  }
  EXPECT_GT(compared, 4000);
}

TEST(PenaltyBits, exact_at_powers_of_two) {
  for (unsigned d = 0; d < 200; ++d) {
    const Rational q = Rational(Integer(1), Integer(1) << d);
    EXPECT_EQ(*penalty_bits(q), d);
    if (d > 0) EXPECT_EQ(*penalty_bits(q + Rational(Integer(1), Integer(1) << (d + 300))), d);
    EXPECT_EQ(*penalty_bits(q - Rational(Integer(1), Integer(1) << (d + 300))), d + 1);
  }
}

TEST(ShannonFano, lengths_examples) {
  const Basis b = Basis::standard(1);
  auto l0 = shannon_fano_lengths(b, StateVector::zero(1));
  EXPECT_EQ(l0[0], 0u);
  EXPECT_EQ(l0[1], std::nullopt);
  auto l1 = shannon_fano_lengths(b, rot0());
  EXPECT_EQ(l1[0], 2u);
  EXPECT_EQ(l1[1], 1u);
}

TEST(ShannonFano, kraft_and_fidelity_bounds_on_random_states) {
  Rng rng = make_rng(3);
  for (int i = 0; i < 50; ++i) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(uniform_below(rng, 3));
    const StateVector z = random_rational_state(n, rng);
    const Basis b = Basis::standard(n);
    const auto lengths = shannon_fano_lengths(b, z);
    Rational kraft(0), total(0);
    for (std::size_t k = 0; k < b.size(); ++k) {
      const Rational q = fidelity(b[k], z);
      total += q;
      if (!lengths[k]) {
        EXPECT_EQ(q, 0);
        continue;
      }
      const Rational w(Integer(1), Integer(1) << static_cast<mp_bitcnt_t>(*lengths[k]));
      kraft += w;
      EXPECT_LE(w, q);
    }
    EXPECT_EQ(total, 1);
    EXPECT_LE(kraft, 2);
  }
}

TEST(ShannonFano, codewords_are_prefix_free_with_the_computed_lengths) {
  Rng rng = make_rng(8);
  for (int i = 0; i < 30; ++i) {
    const StateVector z = random_rational_state(3, rng);
    const Basis b = Basis::standard(3);
    const auto lengths = shannon_fano_lengths(b, z);
    const auto code = shannon_fano_code(b, z);
    std::vector<std::string> words;
    for (std::size_t k = 0; k < code.size(); ++k) {
      ASSERT_EQ(code[k].has_value(), lengths[k].has_value());
      if (!code[k]) continue;
      EXPECT_EQ(code[k]->size(), *lengths[k]);
      words.push_back(*code[k]);
    }
    for (std::size_t a = 0; a < words.size(); ++a)
      for (std::size_t c = 0; c < words.size(); ++c)
        if (a != c) EXPECT_FALSE(words[c].rfind(words[a], 0) == 0) << words[a] << " prefixes " << words[c];
  }
}

TEST(Tensor, examples) {
  EXPECT_EQ(tensor(StateVector::zero(1), StateVector::basis_state(1, 1)), StateVector::classical("01"));
  const StateVector t = tensor(rot0(), StateVector::zero(1));
  EXPECT_EQ(t[0], gr(3, 5));
  EXPECT_EQ(t[1], gr(0, 1));
  EXPECT_EQ(t[2], gr(4, 5));
  EXPECT_EQ(t[3], gr(0, 1));
}

TEST(Tensor, unit_norm_on_random_inputs) {
  Rng rng = make_rng(21);
  for (int i = 0; i < 20; ++i) {
    const StateVector a = random_rational_state(1, rng), b = random_rational_state(2, rng);
    EXPECT_EQ(tensor(a, b).norm2(), 1);
  }
}

TEST(Basis, rotated_basis_is_orthonormal) {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    const Basis r = Basis::rotated(n, default_rotation_circuit(n));
    EXPECT_NO_THROW(Basis(std::vector<StateVector>(r.vectors().begin(), r.vectors().end())));
  }
  EXPECT_THROW(Basis({StateVector::zero(1), StateVector::zero(1)}), UsageError);
}

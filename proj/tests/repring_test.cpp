// Copyright 2026 The qautk Authors
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

#include "error.hpp"
#include "oracles.hpp"
#include "repring.hpp"

using namespace qautk;

namespace {

// Evaluates a polynomial in s at the character of V(1/2).
oracle::Laurent eval_at_fundamental(const IntPoly& p) {
  const oracle::Laurent s = oracle::su2_character(1);
  oracle::Laurent power{{0, 1}};
  oracle::Laurent out;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(std::max(0L, p.degree())); ++k) {
    if (p.degree() < 0) break;
    out = oracle::add(out, power, p.coefficient(k).get_si());
    power = oracle::multiply(power, s);
  }
  return out;
}

oracle::Laurent character_of(const IrrepSum& x) {
  oracle::Laurent out;
  for (const auto& [twice, m] : x.terms()) out = oracle::add(out, oracle::su2_character(twice), m.get_si());
  return out;
}

}  // namespace

TEST(int_poly, arithmetic) {
  const IntPoly a{1, 2};     // 1 + 2t
  const IntPoly b{-1, 0, 1}; // -1 + t^2
  EXPECT_EQ(a + b, (IntPoly{0, 2, 1}));
  EXPECT_EQ(a - a, IntPoly());
  EXPECT_EQ(a * b, (IntPoly{-1, -2, 1, 2}));
  EXPECT_EQ(BigInt(3) * a, (IntPoly{3, 6}));
  EXPECT_EQ(IntPoly().degree(), -1);
  EXPECT_EQ(IntPoly::monomial(3, 5).degree(), 3);
  EXPECT_EQ((IntPoly{0, 0, 0}).degree(), -1);
}

TEST(repring, clebsch_gordan_matches_characters) {
  for (unsigned m = 0; m <= 8; ++m)
    for (unsigned n = 0; n <= 8; ++n) {
      const IrrepSum fused = fusion_tensor(Spin::from_twice(m), Spin::from_twice(n));
      EXPECT_EQ(character_of(fused),
                oracle::multiply(oracle::su2_character(m), oracle::su2_character(n)));
      EXPECT_EQ(fused.dimension(), BigInt((m + 1) * (n + 1)));
    }
}

TEST(repring, fusion_examples) {
  const Spin half = Spin::from_twice(1);
  IrrepSum expected(Spin::from_twice(0));
  expected.add(Spin::from_twice(2), 1);
  EXPECT_EQ(fusion_tensor(half, half), expected);
  EXPECT_EQ(fusion_tensor(half, half).to_string(), "V(0) + V(1)");
  EXPECT_EQ(fusion_tensor(Spin::from_twice(2), Spin::from_twice(2)).to_string(), "V(0) + V(1) + V(2)");
}

TEST(repring, chebyshev_classes_match_characters) {
  for (unsigned j = 0; j <= 12; ++j) {
    EXPECT_EQ(eval_at_fundamental(irrep_class_in_s(j)), oracle::su2_character(j)) << "2j = " << j;
  }
  EXPECT_EQ(irrep_class_in_s(2), (IntPoly{-1, 0, 1}));
  EXPECT_EQ(irrep_class_in_s(3), (IntPoly{0, -2, 0, 1}));
}

TEST(repring, polynomial_form_in_t) {
  EXPECT_EQ(irreps_to_polynomial(IrrepSum(Spin::from_twice(2))), RepRingElement(Parity::Integral, IntPoly{-1, 1}));
  EXPECT_EQ(irreps_to_polynomial(IrrepSum(Spin::from_twice(3))),
            RepRingElement(Parity::HalfIntegral, IntPoly{-2, 1}));
  EXPECT_EQ(irreps_to_polynomial(IrrepSum()), RepRingElement(Parity::Integral, IntPoly()));
}

TEST(repring, mixed_parity_is_rejected) {
  IrrepSum mixed(Spin::from_twice(0));
  mixed.add(Spin::from_twice(1), 1);
  EXPECT_THROW(irreps_to_polynomial(mixed), Error);
  EXPECT_THROW(RepRingElement(Parity::Integral, IntPoly{1}) + RepRingElement(Parity::HalfIntegral, IntPoly{1}),
               Error);
}

TEST(repring, round_trip_through_polynomials) {
  for (unsigned a = 0; a <= 6; ++a)
    for (unsigned b = a; b <= 10; b += 2) {
      IrrepSum x(Spin::from_twice(a), 2);
      x.add(Spin::from_twice(b), 3);
      EXPECT_EQ(polynomial_to_irreps(irreps_to_polynomial(x)), x);
    }
}

TEST(repring, non_effective_element_is_reported) {
  try {
    polynomial_to_irreps(RepRingElement(Parity::Integral, IntPoly{2, -1}));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Domain);
  }
}

TEST(repring, multiplication_by_t_is_tensoring_with_fundamental_twice) {
  // t = s^2 acts on classes as V(1/2) (x) V(1/2) (x) -.
  const RepRingElement t(Parity::Integral, IntPoly{0, 1});
  for (unsigned j = 0; j <= 7; ++j) {
    const IrrepSum v(Spin::from_twice(j));
    const IrrepSum s(Spin::from_twice(1));
    const IrrepSum expected = fuse(s, fuse(s, v));
    EXPECT_EQ(polynomial_to_irreps(module_action(t, irreps_to_polynomial(v))), expected);
  }
  EXPECT_THROW(module_action(RepRingElement(Parity::HalfIntegral, IntPoly{1}), t), Error);
}

TEST(repring, parity_addition) {
  EXPECT_EQ(Parity::Integral + Parity::HalfIntegral, Parity::HalfIntegral);
  EXPECT_EQ(Parity::HalfIntegral + Parity::HalfIntegral, Parity::Integral);
  EXPECT_EQ(Parity::Integral + Parity::Integral, Parity::Integral);
}

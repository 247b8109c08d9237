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

#include <random>

#include "cyclotomic.hpp"
#include "error.hpp"
#include "finite_group.hpp"
#include "oracles.hpp"
#include "test_groups.hpp"
#include "torsion.hpp"

using namespace qautk;

namespace {

oracle::Table table_of(const FiniteGroup& g) { return oracle::Table{g.table(), g.identity()}; }

// M_2 spanned by 1, sigma_z, sigma_x, sigma_y, graded by C2 x C2 (index 2x + y).
GradedAlgebra pauli_algebra() {
  const FieldPtr f = cyclotomic_field(4);
  const Cyclotomic o(f), one(f, Rational(1)), i = Cyclotomic::root(f, 1);
  const Cyclotomic m1 = Cyclotomic(f, Rational(-1));
  const std::vector<CycloMatrix> mats = {
      {{one, o}, {o, one}},
      {{one, o}, {o, m1}},
      {{o, one}, {one, o}},
      {{o, m1 * i}, {i, o}},
  };
  const FiniteGroup c2 = FiniteGroup::cyclic(2);
  return GradedAlgebra(algebra_from_matrices(f, {"1", "sz", "sx", "sy"}, mats), FiniteGroup::direct_product(c2, c2),
                       {0, 1, 2, 3});
}

}  // namespace

TEST(cyclotomic, polynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<BigInt>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<BigInt>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<BigInt>{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<BigInt>{1, -1, 1}));
}

TEST(cyclotomic, field_arithmetic) {
  for (unsigned n : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
    const FieldPtr f = cyclotomic_field(n);
    const Cyclotomic z = Cyclotomic::root(f, 1);
    Cyclotomic p(f, Rational(1));
    for (unsigned k = 0; k < n; ++k) p = p * z;
    EXPECT_EQ(p, Cyclotomic(f, Rational(1))) << n;
    EXPECT_EQ(z * z.conj(), Cyclotomic(f, Rational(1)));
    const Cyclotomic x = z + Cyclotomic(f, Rational(2));
    EXPECT_EQ(x * inverse(x), Cyclotomic(f, Rational(1)));
    EXPECT_NEAR(std::abs(z.to_complex() - std::polar(1.0, 2 * M_PI / n)), 0.0, 1e-12);
    EXPECT_EQ(z.root_exponent(), std::optional<unsigned>(n == 1 ? 0u : 1u));
  }
  const FieldPtr f = cyclotomic_field(3);
  // 1 + zeta + zeta^2 = 0
  EXPECT_TRUE((Cyclotomic::root(f, 0) + Cyclotomic::root(f, 1) + Cyclotomic::root(f, 2)).is_zero());
  EXPECT_THROW(inverse(Cyclotomic(f)), Error);
}

TEST(finite_group, builtin_groups_are_valid) {
  for (const auto& [name, g] : small_groups()) {
    EXPECT_EQ(g.mul(g.identity(), g.identity()), g.identity()) << name;
    for (std::size_t a = 0; a < g.order(); ++a) EXPECT_EQ(g.mul(a, g.inv(a)), g.identity()) << name;
  }
  EXPECT_FALSE(FiniteGroup::symmetric(3).is_abelian());
  EXPECT_FALSE(FiniteGroup::quaternion().is_abelian());
  EXPECT_TRUE(FiniteGroup::cyclic(5).is_abelian());
  EXPECT_EQ(FiniteGroup::symmetric(3).conjugacy_classes().size(), 3u);
  EXPECT_EQ(FiniteGroup::dihedral(4).conjugacy_classes().size(), 5u);
}

TEST(finite_group, invalid_tables_are_rejected) {
  EXPECT_THROW(FiniteGroup({{0, 1}, {1, 1}}, 0), Error);      // 1 has no inverse
  EXPECT_THROW(FiniteGroup({{0, 1}, {1, 0}}, 1), Error);      // 1 is not an identity
  EXPECT_THROW(FiniteGroup({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}}, 0), Error);
  EXPECT_THROW(FiniteGroup({{0, 1}, {1, 5}}, 0), Error);
  EXPECT_THROW(FiniteGroup({{0, 1}}, 0), Error);
}

TEST(cocycle, validation) {
  const FiniteGroup c2 = FiniteGroup::cyclic(2);
  EXPECT_NO_THROW(Cocycle(c2, 2, {{0, 0}, {0, 1}}));
  EXPECT_THROW(Cocycle(c2, 2, {{1, 0}, {0, 0}}), Error);  // not normalised
  EXPECT_THROW(Cocycle(c2, 2, {{0, 0}, {0, 2}}), Error);  // out of range
  const FiniteGroup c3 = FiniteGroup::cyclic(3);
  EXPECT_THROW(Cocycle(c3, 3, {{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}), Error);  // identity fails
}

TEST(cocycle, coboundaries_are_cocycles_with_full_regularity) {
  const FiniteGroup g = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  const std::vector<unsigned> beta{0, 1, 3, 2};
  const Cocycle w = Cocycle::coboundary(g, 4, beta);
  EXPECT_EQ(w.regular_class_count(), 4u);
  EXPECT_EQ((w * Cocycle::trivial(g, 2)).root_order(), 4u);
}

TEST(torsion, group_algebra_of_c2_is_ergodic) {
  const GradedAlgebra b = twisted_group_algebra(Cocycle::trivial(FiniteGroup::cyclic(2)));
  EXPECT_TRUE(is_ergodic(b));
  const auto blocks = block_decomposition(b.algebra());
  EXPECT_EQ(blocks.block_sizes, (std::vector<std::size_t>{1, 1}));
}

TEST(torsion, trivially_graded_c2_is_not_ergodic) {
  const FieldPtr f = cyclotomic_field(1);
  const Cyclotomic o(f), one(f, Rational(1));
  const StructureAlgebra c2(f, {"p1", "p2"}, {{one, o}, {o, o}, {o, o}, {o, one}},
                            std::vector<CycloVector>{{one, o}, {o, one}});
  const GradedAlgebra b(c2, FiniteGroup::cyclic(2), {0, 0});
  EXPECT_FALSE(is_ergodic(b));
  try {
    extract_torsion_data(b);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Domain);
  }
}

TEST(torsion, pauli_grading_gives_commutator_minus_one) {
  const GradedAlgebra b = pauli_algebra();
  EXPECT_TRUE(is_ergodic(b));
  const TorsionData t = extract_torsion_data(b);
  ASSERT_EQ(t.subgroup.order(), 4u);
  const Cocycle& w = t.cocycle;
  ASSERT_EQ(w.root_order(), 4u);
  // generators x = 2, z = 1 in the subgroup, which is all of C2 x C2 here.
  EXPECT_EQ(t.embedding, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ((w.exponent(2, 1) + 4 - w.exponent(1, 2)) % 4, 2u);
  EXPECT_EQ(w.regular_class_count(), 1u);
  EXPECT_EQ(block_decomposition(b.algebra()).block_sizes, (std::vector<std::size_t>{2}));
}

TEST(torsion, pauli_cocycle_twisted_algebra_is_m2) {
  const GradedAlgebra b = pauli_algebra();
  const TorsionData t = extract_torsion_data(b);
  const GradedAlgebra twisted = twisted_group_algebra(t.cocycle);
  const auto blocks = block_decomposition(twisted.algebra());
  EXPECT_EQ(blocks.block_sizes, (std::vector<std::size_t>{2}));
  EXPECT_EQ(blocks.center_dimension, 1u);
}

TEST(torsion, untwisted_c3_round_trip) {
  const Cocycle w = Cocycle::trivial(FiniteGroup::cyclic(3), 3);
  const TorsionData t = extract_torsion_data(twisted_group_algebra(w));
  EXPECT_EQ(t.subgroup.table(), FiniteGroup::cyclic(3).table());
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t u = 0; u < 3; ++u) EXPECT_EQ(t.cocycle.exponent(s, u), 0u);
  EXPECT_EQ(block_decomposition(twisted_group_algebra(w).algebra()).block_sizes,
            (std::vector<std::size_t>{1, 1, 1}));
}

TEST(torsion, group_algebras_match_character_degrees) {
  for (const auto& [name, g] : small_groups()) {
    const auto degrees = oracle::irreducible_degrees(table_of(g));
    ASSERT_FALSE(degrees.empty()) << name;
    const auto blocks = block_decomposition(twisted_group_algebra(Cocycle::trivial(g)).algebra());
    EXPECT_EQ(blocks.block_sizes, degrees) << name;
    EXPECT_EQ(blocks.center_dimension, oracle::conjugacy_class_count(table_of(g))) << name;
  }
  EXPECT_EQ(block_decomposition(twisted_group_algebra(Cocycle::trivial(FiniteGroup::symmetric(3))).algebra())
                .block_sizes,
            (std::vector<std::size_t>{1, 1, 2}));
}

TEST(torsion, twisted_algebras_are_associative_on_all_triples) {
  std::mt19937_64 rng(99);
  for (const auto& [name, g] : small_groups()) {
    const auto basis = oracle::cocycle_basis_mod_p(table_of(g), 2);
    const Cocycle w(g, 2, oracle::random_cocycle(basis, g.order(), 2, rng));
    const GradedAlgebra b = twisted_group_algebra(w);
    const auto& a = b.algebra();
    const std::size_t n = g.order();
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t u = 0; u < n; ++u) {
          // (d_s d_t) d_u and d_s (d_t d_u) are single terms at stu.
          const std::size_t st = g.mul(s, t), tu = g.mul(t, u), stu = g.mul(st, u);
          const Cyclotomic left = a.product(s, t)[st] * a.product(st, u)[stu];
          const Cyclotomic right = a.product(t, u)[tu] * a.product(s, tu)[stu];
          EXPECT_EQ(left, right) << name;
        }
  }
}

TEST(torsion, sampled_cocycles_round_trip) {
  std::mt19937_64 rng(1234);
  for (const auto& [name, g] : small_groups()) {
    for (unsigned p : {2u, 3u}) {
      const auto basis = oracle::cocycle_basis_mod_p(table_of(g), p);
      for (int sample = 0; sample < 3; ++sample) {
        const auto exps = oracle::random_cocycle(basis, g.order(), p, rng);
        const Cocycle w(g, p, exps);
        const std::size_t regular = oracle::regular_class_count(table_of(g), exps);
        EXPECT_EQ(w.regular_class_count(), regular) << name;
        const GradedAlgebra b = twisted_group_algebra(w);
        const TorsionData t = extract_torsion_data(b);
        EXPECT_EQ(t.cocycle.regular_class_count(), regular) << name;
        const auto blocks = block_decomposition(b.algebra());
        EXPECT_EQ(blocks.center_dimension, regular) << name;
        std::size_t squares = 0;
        for (auto m : blocks.block_sizes) squares += m * m;
        EXPECT_EQ(squares, g.order()) << name;
      }
    }
  }
}

TEST(torsion, nontrivial_classes_are_sampled) {
  // C2 x C2 carries a cocycle with a single regular class; the F_2 cocycle space must reach it.
  const FiniteGroup g = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  const auto basis = oracle::cocycle_basis_mod_p(table_of(g), 2);
  bool found = false;
  for (std::size_t mask = 0; mask < (std::size_t{1} << basis.size()) && !found; ++mask) {
    std::vector<std::vector<unsigned>> e(4, std::vector<unsigned>(4, 0));
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (mask >> b & 1)
        for (std::size_t s = 0; s < 4; ++s)
          for (std::size_t t = 0; t < 4; ++t) e[s][t] ^= basis[b][s][t];
    found = Cocycle(g, 2, e).regular_class_count() == 1;
  }
  EXPECT_TRUE(found);
}

TEST(torsion, grading_violations_are_rejected) {
  const GradedAlgebra b = twisted_group_algebra(Cocycle::trivial(FiniteGroup::cyclic(3)));
  EXPECT_THROW(GradedAlgebra(b.algebra(), FiniteGroup::cyclic(3), {0, 1, 1}), Error);
  EXPECT_NO_THROW(GradedAlgebra(b.algebra(), FiniteGroup::cyclic(3), {0, 2, 1}));
  EXPECT_THROW(GradedAlgebra(b.algebra(), FiniteGroup::cyclic(3), {0, 1}), Error);
}

TEST(torsion, non_semisimple_algebra_reports_radical) {
  // C[x] / (x^2)
  const FieldPtr f = cyclotomic_field(1);
  const Cyclotomic o(f), one(f, Rational(1));
  const StructureAlgebra a(f, {"1", "x"}, {{one, o}, {o, one}, {o, one}, {o, o}});
  try {
    block_decomposition(a);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Domain);
    EXPECT_NE(std::string(e.what()).find("x"), std::string::npos);
  }
}

TEST(torsion, non_associative_constants_are_rejected) {
  const FieldPtr f = cyclotomic_field(1);
  const Cyclotomic o(f), one(f, Rational(1)), two(f, Rational(2));
  // (b b) b = a b = b but b (b b) = b a = 0.
  EXPECT_THROW(StructureAlgebra(f, {"a", "b"}, {{one, o}, {o, one}, {o, o}, {one, o}}), Error);
  EXPECT_NO_THROW(StructureAlgebra(f, {"a", "b"}, {{one, o}, {o, one}, {o, one}, {two, o}}));
}

TEST(torsion, components_without_invertibles_are_reported) {
  // C[x]/(x^2) graded by C2 with x odd: ergodic, but x is not invertible.
  const FieldPtr f = cyclotomic_field(1);
  const Cyclotomic o(f), one(f, Rational(1));
  const StructureAlgebra a(f, {"1", "x"}, {{one, o}, {o, one}, {o, one}, {o, o}},
                           std::vector<CycloVector>{{one, o}, {o, one}});
  const GradedAlgebra b(a, FiniteGroup::cyclic(2), {0, 1});
  EXPECT_TRUE(is_ergodic(b));
  try {
    extract_torsion_data(b);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Domain);
    EXPECT_NE(std::string(e.what()).find("invertible"), std::string::npos);
  }
}

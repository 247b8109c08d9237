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

#include "error.hpp"
#include "ktheory.hpp"
#include "oracles.hpp"
#include "smith.hpp"

using namespace qautk;

namespace {

DimVector dims(std::vector<std::uint64_t> k) { return DimVector(std::move(k)); }

oracle::Dense dense(const IntMatrix& m) {
  oracle::Dense d(m.rows(), std::vector<oracle::Int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m(r, c);
  return d;
}

}  // namespace

TEST(dim_vector, parse_and_validate) {
  EXPECT_EQ(DimVector::parse("2,4"), dims({2, 4}));
  EXPECT_EQ(DimVector::parse(" 1, 1 ,1"), dims({1, 1, 1}));
  EXPECT_THROW(DimVector::parse(""), Error);
  EXPECT_THROW(DimVector::parse("2,0"), Error);
  EXPECT_THROW(DimVector::parse("2,-1"), Error);
  EXPECT_THROW(DimVector::parse("2,,3"), Error);
  EXPECT_THROW(DimVector::parse("x"), Error);
  EXPECT_THROW(dims({}), Error);
  EXPECT_EQ(dims({2, 4}).algebra_dimension(), 20);
  EXPECT_EQ(dims({6, 4, 10}).gcd(), 2);
}

TEST(dim_vector, scope) {
  EXPECT_TRUE(dims({1}).below_theorem_scope());
  EXPECT_TRUE(dims({1, 1, 1}).below_theorem_scope());
  EXPECT_FALSE(dims({2}).below_theorem_scope());
  EXPECT_FALSE(dims({1, 1, 1, 1}).below_theorem_scope());
  EXPECT_FALSE(dims({1, 1, 1}).scope_warning().empty());
}

TEST(ktheory, boundary_matrix_layout) {
  const IntMatrix m = boundary_matrix(dims({2, 3}));
  // Row block i carries k in column i and -k_i on the right identity block; last row (-k | k).
  const IntMatrix expected = IntMatrix::from_rows({
      {2, 0, -2, 0},
      {3, 0, 0, -2},
      {0, 2, -3, 0},
      {0, 3, 0, -3},
      {-2, -3, 2, 3},
  });
  EXPECT_EQ(m, expected);
  EXPECT_EQ(boundary_matrix(dims({1, 1, 1, 1})).rows(), 17u);
  EXPECT_EQ(boundary_matrix(dims({1, 1, 1, 1})).cols(), 8u);
}

TEST(ktheory, named_instances) {
  EXPECT_EQ(k_theory(dims({1, 1, 1, 1})).k0, FgAbelianGroup::free(10));
  EXPECT_EQ(k_theory(dims({1, 1, 1, 1})).k1, FgAbelianGroup::free(1));
  for (std::size_t n = 4; n <= 6; ++n) {
    const auto r = k_theory(DimVector(std::vector<std::uint64_t>(n, 1)));
    EXPECT_EQ(r.k0, FgAbelianGroup::free(n * n - 2 * n + 2));
    EXPECT_EQ(r.k1, FgAbelianGroup::free(1));
  }
  EXPECT_EQ(k_theory(dims({2})).k0, FgAbelianGroup(1, {BigInt(2)}));
  EXPECT_EQ(k_theory(dims({2, 4})).k0.to_string(), "Z^2 + Z_2^3");
}

TEST(ktheory, closed_form_formula) {
  const auto [k0, k1] = closed_form(dims({6, 4, 10}));
  EXPECT_EQ(k0, FgAbelianGroup(5, std::vector<BigInt>(5, BigInt(2))));
  EXPECT_EQ(k1, FgAbelianGroup::free(1));
  EXPECT_EQ(closed_form(dims({3})).first, FgAbelianGroup(1, {BigInt(3)}));
}

TEST(ktheory, boundary_route_agrees_with_minors_oracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 15; ++trial) {
    std::uniform_int_distribution<std::size_t> pick_n(1, 3);
    std::uniform_int_distribution<std::uint64_t> pick_k(1, 6);
    std::vector<std::uint64_t> kv(pick_n(rng));
    for (auto& v : kv) v = pick_k(rng);
    const DimVector k(kv);
    const IntMatrix m = boundary_matrix(k);
    const auto factors = oracle::invariant_factors_from_minors(dense(m));
    std::vector<BigInt> torsion;
    for (const auto& f : factors)
      if (f > 1) torsion.push_back(f);
    const FgAbelianGroup coker(m.rows() - factors.size(), torsion);
    const auto r = k_theory(k);
    EXPECT_EQ(r.k0, coker) << k.to_string();
    EXPECT_EQ(r.k1, FgAbelianGroup::free(m.cols() - factors.size())) << k.to_string();
  }
}

TEST(ktheory, random_vectors_match_closed_form) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> pick_n(1, 6);
    std::uniform_int_distribution<std::uint64_t> pick_k(1, 8);
    std::vector<std::uint64_t> kv(pick_n(rng));
    for (auto& v : kv) v = pick_k(rng);
    const DimVector k(kv);
    EXPECT_TRUE(verify_theorem(k)) << k.to_string();
  }
}

TEST(ktheory, kernel_generator) {
  for (const auto& kv : std::vector<std::vector<std::uint64_t>>{{2, 4}, {3, 6, 9}, {1, 2, 3, 4}, {5}}) {
    const DimVector k(kv);
    const auto r = k_theory(k);
    const IntVector e = expected_kernel_generator(k);
    IntVector neg;
    for (const auto& v : e) neg.push_back(-v);
    EXPECT_TRUE(r.kernel_generator == e || r.kernel_generator == neg) << k.to_string();
    for (const auto& x : boundary_matrix(k).apply(e)) EXPECT_EQ(x, 0);
  }
  EXPECT_EQ(expected_kernel_generator(dims({2, 4})), (IntVector{1, 2, 1, 2}));
}

TEST(ktheory, scope_warning_is_reported) {
  EXPECT_FALSE(k_theory(dims({1, 1})).warnings.empty());
  EXPECT_TRUE(k_theory(dims({1, 1, 1, 1})).warnings.empty());
}

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
#include "resolution.hpp"
#include "smith.hpp"

using namespace qautk;

namespace {

DimVector dims(std::vector<std::uint64_t> k) { return DimVector(std::move(k)); }

IntMatrix outer(const DimVector& k) {
  IntMatrix m(k.n(), k.n());
  for (std::size_t i = 0; i < k.n(); ++i)
    for (std::size_t j = 0; j < k.n(); ++j) m(i, j) = BigInt(static_cast<unsigned long>(k[i] * k[j]));
  return m;
}

}  // namespace

TEST(resolution, diagram_shape_and_entries) {
  const DimVector k = dims({2, 3});
  const ResolutionDiagram d = resolution_diagram(k);
  ASSERT_EQ(d.source.size(), 3u);
  ASSERT_EQ(d.target.size(), 3u);
  EXPECT_EQ(d.d1.size(), 9u);
  std::size_t integral = 0, half = 0;
  for (const auto& e : d.d1) {
    if (e.poly.is_zero()) continue;
    (e.parity == Parity::Integral ? integral : half)++;
  }
  EXPECT_GT(integral, 0u);
  EXPECT_GT(half, 0u);
}

TEST(resolution, module_parity_rule) {
  EXPECT_EQ(module_parity(TestObject::Scalars, ObjectKind::Scalars), Parity::Integral);
  EXPECT_EQ(module_parity(TestObject::Scalars, ObjectKind::Algebra), Parity::HalfIntegral);
  EXPECT_EQ(module_parity(TestObject::Algebra, ObjectKind::Algebra), Parity::Integral);
  EXPECT_EQ(module_parity(TestObject::Algebra, ObjectKind::Scalars), Parity::HalfIntegral);
}

TEST(resolution, derived_t_action_on_scalars_is_sum_of_squares) {
  for (const auto& kv : std::vector<std::vector<std::uint64_t>>{{1}, {2}, {1, 1, 1, 1}, {2, 3}, {4, 1, 2}}) {
    const DimVector k(kv);
    const IntMatrix t = derive_t_action(k, TestObject::Scalars);
    ASSERT_EQ(t.rows(), 1u);
    ASSERT_EQ(t.cols(), 1u);
    EXPECT_EQ(t(0, 0), k.algebra_dimension()) << k.to_string();
  }
}

TEST(resolution, derived_t_action_on_algebra_is_outer_product) {
  for (const auto& kv : std::vector<std::vector<std::uint64_t>>{{1}, {3}, {1, 2}, {2, 2, 3}, {1, 1, 1, 1}}) {
    const DimVector k(kv);
    EXPECT_EQ(derive_t_action(k, TestObject::Algebra), outer(k)) << k.to_string();
  }
}

TEST(resolution, composition_vanishes_on_truncation) {
  for (TestObject t : {TestObject::Scalars, TestObject::Algebra}) {
    const InducedComplex c = build_complex(dims({2, 3, 1}), t);
    const unsigned degree = 5;
    const IntMatrix d1 = c.d1.truncate(degree);
    const IntMatrix d0 = c.d0.truncate(degree + static_cast<unsigned>(c.d1.max_degree()));
    EXPECT_TRUE((d0 * d1).is_zero());
  }
}

TEST(resolution, exactness_is_certified) {
  for (const auto& kv : std::vector<std::vector<std::uint64_t>>{{1}, {2}, {1, 1, 1, 1}, {2, 4}, {3, 1, 2}}) {
    for (TestObject t : {TestObject::Scalars, TestObject::Algebra}) {
      const ExactnessReport r = check_exactness(DimVector(kv), t, 8);
      EXPECT_TRUE(r.composition_zero);
      EXPECT_TRUE(r.d1_injective);
      EXPECT_TRUE(r.kernel_in_image);
      EXPECT_TRUE(r.d0_surjective);
      EXPECT_EQ(r.unreached, 0u);
      EXPECT_EQ(r.certified_degree, 7u);
      EXPECT_TRUE(r.exact());
    }
  }
}

TEST(resolution, wrong_t_action_breaks_the_complex) {
  // Perturbing the evaluation target's t-action must destroy d0 o d1 = 0.
  const DimVector k = dims({2, 3});
  InducedComplex c = build_complex(k, TestObject::Scalars);
  c.d0.t_action(0, 0) += 1;
  const IntMatrix d1 = c.d1.truncate(4);
  const IntMatrix d0 = c.d0.truncate(4 + static_cast<unsigned>(c.d1.max_degree()));
  EXPECT_FALSE((d0 * d1).is_zero());
}

TEST(resolution, degree_bound_must_be_at_least_two) {
  EXPECT_THROW(check_exactness(dims({2}), TestObject::Scalars, 1), Error);
  EXPECT_NO_THROW(check_exactness(dims({2}), TestObject::Scalars, 2));
}

TEST(resolution, scope_warning_propagates) {
  EXPECT_FALSE(check_exactness(dims({1, 1}), TestObject::Scalars, 4).warnings.empty());
}

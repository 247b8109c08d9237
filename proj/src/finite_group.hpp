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

#ifndef QAUTK_FINITE_GROUP_HPP_
#define QAUTK_FINITE_GROUP_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qautk {

/// A finite group given by its Cayley table; the group axioms are checked on construction.
class FiniteGroup {
 public:
  /// table[a][b] = a * b. Throws InvalidArgument when the table is not a group law.
  FiniteGroup(std::vector<std::vector<std::size_t>> table, std::size_t identity);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  /// Permutations of {0..n-1} in lexicographic order, composed as (p q)(i) = p(q(i)).
  static FiniteGroup symmetric(std::size_t n);
  /// Dihedral group of order 2m.
  static FiniteGroup dihedral(std::size_t m);
  /// Quaternion group of order 8.
  static FiniteGroup quaternion();

  std::size_t order() const noexcept { return order_; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  bool commute(std::size_t a, std::size_t b) const { return mul(a, b) == mul(b, a); }
  bool is_abelian() const;

  std::vector<std::vector<std::size_t>> table() const;
  std::vector<std::vector<std::size_t>> conjugacy_classes() const;

 private:
  std::size_t order_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
};

/// Normalised U(1)-valued 2-cocycle with values in the roots of unity of order root_order:
/// w(s, t) = exp(2 pi i exponent(s, t) / root_order).
class Cocycle {
 public:
  /// Checks the cocycle identity and normalisation; throws InvalidArgument otherwise.
  Cocycle(FiniteGroup group, unsigned root_order, std::vector<std::vector<unsigned>> exponents);

  static Cocycle trivial(const FiniteGroup& group, unsigned root_order = 1);
  /// d(beta)(s, t) = beta(s) beta(t) / beta(st); beta(identity) must be 0.
  static Cocycle coboundary(const FiniteGroup& group, unsigned root_order,
                            std::span<const unsigned> beta);

  const FiniteGroup& group() const noexcept { return group_; }
  unsigned root_order() const noexcept { return root_order_; }
  unsigned exponent(std::size_t s, std::size_t t) const { return exps_[s * group_.order() + t]; }
  std::vector<std::vector<unsigned>> exponents() const;

  /// Pointwise product; the result uses lcm of the two root orders.
  Cocycle operator*(const Cocycle& other) const;
  /// Same cocycle with values written over roots of unity of order m (a multiple).
  Cocycle lifted(unsigned m) const;

  /// s is regular when w(s, t) = w(t, s) for every t commuting with s.
  bool is_regular(std::size_t s) const;
  /// Number of conjugacy classes of regular elements (regularity is a class function).
  std::size_t regular_class_count() const;

 private:
  FiniteGroup group_;
  unsigned root_order_;
  std::vector<unsigned> exps_;
};

}  // namespace qautk

#endif  // QAUTK_FINITE_GROUP_HPP_

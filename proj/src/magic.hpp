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


#ifndef QAUTK_MAGIC_HPP_
#define QAUTK_MAGIC_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "int_matrix.hpp"

namespace qautk {

/// Magic unitary evaluated at a character of C(S_n), so every entry is 0 or 1.
class MagicMatrix {
 public:
  /// Throws InvalidArgument unless the entries form an n x n 0/1 matrix with unit line sums.
  explicit MagicMatrix(IntMatrix entries);

  std::size_t n() const noexcept { return u_.rows(); }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return u_(i, j); }
  const IntMatrix& entries() const noexcept { return u_; }

  /// u* = u = u^2 entrywise, and every row and column sums to 1.
  static bool satisfies_relations(const IntMatrix& u);

 private:
  IntMatrix u_;
};

/// u_ij = 1 iff sigma(i) = j. Throws InvalidArgument when sigma is not a bijection of {0..n-1}.
MagicMatrix permutation_to_magic(std::span<const std::size_t> sigma);

inline constexpr std::size_t kDefaultMagicMaxN = 7;

/// n! x (n^2 + 1) matrix: rows are permutations in lexicographic order, columns are the class of 1
/// followed by u_ij in lexicographic order of (i, j).
IntMatrix evaluation_matrix(std::size_t n, std::size_t max_n = kDefaultMagicMaxN);

struct GeneratorRank {
  std::size_t n = 0;
  std::size_t full_rank = 0;
  std::size_t restricted_rank = 0;
  /// All invariant factors of the restricted columns are 1, so their span is a direct summand.
  bool saturated = false;
  /// Every column of the full matrix is an integer combination of the restricted columns.
  bool spans_equal = false;
};

/// Restricted columns are 1 and u_ij for i, j < n - 1 (zero based).
GeneratorRank generator_rank(std::size_t n, std::size_t max_n = kDefaultMagicMaxN);

}  // namespace qautk

#endif  // QAUTK_MAGIC_HPP_

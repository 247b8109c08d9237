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

#ifndef QAUTK_ABELIAN_GROUP_HPP_
#define QAUTK_ABELIAN_GROUP_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "int_matrix.hpp"

namespace qautk {

/// A finitely generated abelian group Z^r + Z_{t1} + ... + Z_{tm} in invariant-factor form:
/// every torsion coefficient is > 1 and t_i divides t_{i+1}. Two values compare equal
/// exactly when the groups are isomorphic.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;

  /// Accepts any list of cyclic orders; 0 contributes a free summand, 1 and -1 are dropped,
  /// signs are ignored. The result is re-canonicalized.
  FgAbelianGroup(std::size_t free_rank, std::vector<BigInt> cyclic_orders);

  static FgAbelianGroup free(std::size_t rank) { return FgAbelianGroup(rank, {}); }

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<BigInt>& torsion() const noexcept { return torsion_; }
  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }

  /// Human-readable form such as "Z^2 + Z_2^3" or "0".
  std::string to_string() const;

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<BigInt> torsion_;
};

bool fg_group_isomorphic(const FgAbelianGroup& g, const FgAbelianGroup& h);
FgAbelianGroup fg_direct_sum(const FgAbelianGroup& g, const FgAbelianGroup& h);

}  // namespace qautk

#endif  // QAUTK_ABELIAN_GROUP_HPP_

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

#ifndef QAUTK_KTHEORY_HPP_
#define QAUTK_KTHEORY_HPP_

#include <string>
#include <utility>
#include <vector>

#include "abelian_group.hpp"
#include "dim_vector.hpp"
#include "int_matrix.hpp"

namespace qautk {

/// K_0-level map Z^n + Z^n -> (Z^n)^n + Z induced by d1. Shape (n^2 + 1) x 2n.
///
/// Row block i (rows i*n .. i*n+n-1) holds k as a column in column i and -k_i * 1 in the last
/// n columns; the final row is (-k_1, ..., -k_n | k_1, ..., k_n).
IntMatrix boundary_matrix(const DimVector& k);

struct KTheoryResult {
  FgAbelianGroup k0;
  FgAbelianGroup k1;
  IntMatrix boundary;
  IntVector kernel_generator;  // empty unless ker has rank exactly 1
  std::vector<std::string> warnings;
};

/// K_0 = coker(boundary), K_1 = ker(boundary).
KTheoryResult k_theory(const DimVector& k);

/// (Z^{(n-1)^2+1} + Z_d^{2n-1}, Z) with d = gcd(k).
std::pair<FgAbelianGroup, FgAbelianGroup> closed_form(const DimVector& k);

bool verify_theorem(const DimVector& k);

/// (k_1/d, ..., k_n/d, k_1/d, ..., k_n/d).
IntVector expected_kernel_generator(const DimVector& k);

}  // namespace qautk

#endif  // QAUTK_KTHEORY_HPP_

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

#ifndef QAUTK_SMITH_HPP_
#define QAUTK_SMITH_HPP_

#include <optional>
#include <span>
#include <vector>

#include "abelian_group.hpp"
#include "int_matrix.hpp"

namespace qautk {

/// U * A * V = S with U, V unimodular and S diagonal. The diagonal (invariant_factors, length
/// min(rows, cols)) is a nonnegative divisibility chain with zeros trailing.
struct SmithDecomposition {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
  IntVector invariant_factors;
  std::size_t rank = 0;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Same diagonal as smith_normal_form without accumulating the transforms.
IntVector invariant_factors(const IntMatrix& a);
std::size_t integer_rank(const IntMatrix& a);

/// Row-style Hermite normal form of the lattice spanned by the rows of `a`: upper echelon,
/// positive pivots, entries above each pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// A lattice basis of {x : A x = 0} in Hermite form (first nonzero coordinate positive).
std::vector<IntVector> kernel_basis(const IntMatrix& a);

/// Columns rank..cols of V; a lattice basis of the kernel without canonicalization.
std::vector<IntVector> kernel_lattice(const SmithDecomposition& snf);

FgAbelianGroup cokernel(const IntMatrix& a);

/// An integer solution of A x = b, if one exists, using a decomposition of A.
std::optional<IntVector> solve_integer(const SmithDecomposition& snf, std::span<const BigInt> b);

bool is_unimodular(const IntMatrix& m);

}  // namespace qautk

#endif  // QAUTK_SMITH_HPP_

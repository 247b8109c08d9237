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

#ifndef QAUTK_TORSION_HPP_
#define QAUTK_TORSION_HPP_

// Ergodic coactions of a discrete group G on finite dimensional algebras, in the graded
// picture B = sum_s B_s. An ergodic B is supported on a finite subgroup H with one-dimensional
// components spanned by unitaries delta_s, and delta_s delta_t = w(s, t) delta_{st} recovers a
// 2-cocycle; B is then the twisted group algebra C*_w(H).

#include <optional>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "finite_group.hpp"

namespace qautk {

using CycloVector = std::vector<Cyclotomic>;
using CycloMatrix = std::vector<std::vector<Cyclotomic>>;

/// Associative algebra over Q(zeta_N) given by structure constants in a fixed basis, with an
/// optional conjugate-linear involution.
class StructureAlgebra {
 public:
  /// products[i * d + j] = coordinates of b_i b_j; star[i] = coordinates of b_i^*.
  /// Throws InvalidArgument on shape errors or failure of associativity.
  StructureAlgebra(FieldPtr field, std::vector<std::string> labels, std::vector<CycloVector> products,
                   std::optional<std::vector<CycloVector>> star = std::nullopt);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const CycloVector& product(std::size_t i, std::size_t j) const { return products_[i * dimension() + j]; }
  bool has_star() const noexcept { return star_.has_value(); }
  const CycloVector& star(std::size_t i) const;

  CycloVector zero() const;
  CycloVector basis_vector(std::size_t i) const;
  CycloVector multiply(const CycloVector& x, const CycloVector& y) const;
  CycloVector apply_star(const CycloVector& x) const;

 private:
  FieldPtr field_;
  std::vector<std::string> labels_;
  std::vector<CycloVector> products_;
  std::optional<std::vector<CycloVector>> star_;
};

/// Structure constants of the span of `matrices` (closed under product and adjoint).
StructureAlgebra algebra_from_matrices(FieldPtr field, std::vector<std::string> labels,
                                       const std::vector<CycloMatrix>& matrices);

/// Basis element i sits in the component of group element grading[i].
class GradedAlgebra {
 public:
  /// Throws InvalidArgument if products or the involution do not respect the grading.
  GradedAlgebra(StructureAlgebra algebra, FiniteGroup group, std::vector<std::size_t> grading);

  const StructureAlgebra& algebra() const noexcept { return algebra_; }
  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<std::size_t>& grading() const noexcept { return grading_; }
  std::size_t component_dimension(std::size_t g) const;

 private:
  StructureAlgebra algebra_;
  FiniteGroup group_;
  std::vector<std::size_t> grading_;
};

/// The identity component is one-dimensional.
bool is_ergodic(const GradedAlgebra& b);

struct TorsionData {
  FiniteGroup subgroup;
  std::vector<std::size_t> embedding;  // subgroup index -> ambient group element
  Cocycle cocycle;                     // over roots of unity of the field order
};

/// Reads off (H, w) from an ergodic graded algebra with an involution. Throws Domain when the
/// algebra is not ergodic, a component is not spanned by an invertible element, or the
/// normalized structure constants are not roots of unity in the field.
TorsionData extract_torsion_data(const GradedAlgebra& b);

/// Basis delta_s, delta_s delta_t = w(s,t) delta_{st}, delta_s^* = w(s, s^-1)^-1 delta_{s^-1}.
GradedAlgebra twisted_group_algebra(const Cocycle& w);

struct BlockDecomposition {
  std::vector<std::size_t> block_sizes;  // ascending
  std::size_t center_dimension = 0;
};

inline constexpr double kEigenvalueClusterTolerance = 1e-9;

/// Wedderburn block sizes. The center dimension is exact; block sizes come from the eigenvalue
/// multiplicities of a random central element acting on B, and must agree with it.
/// Throws Domain with a radical element when the trace form is degenerate.
BlockDecomposition block_decomposition(const StructureAlgebra& b);

}  // namespace qautk

#endif  // QAUTK_TORSION_HPP_

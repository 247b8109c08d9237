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

#ifndef QAUTK_FINDIM_CSTAR_HPP_
#define QAUTK_FINDIM_CSTAR_HPP_

// Multi-matrix algebras A = M_{k_1} + ... + M_{k_n} with a state w(x) = sum_i Tr(Q_i x_i),
// the GNS inner product <a, b> = w(a* b), and the operator mu mu* for the multiplication
// map mu : A (x) A -> A. A state is a delta-form when mu mu* = delta^2 id.
//
// Everything is computed in the basis of matrix units e^{(b)}_{ij}, ordered by block, then
// row, then column. That basis is orthogonal but not normalized when the densities are
// diagonal, so mu mu* is reported as an operator in that basis; scalarity, trace and spectrum
// do not depend on the choice.

#include <optional>
#include <string>
#include <vector>

#include "dim_vector.hpp"
#include "rational_complex.hpp"

namespace qautk {

class FinDimAlgebra {
 public:
  explicit FinDimAlgebra(DimVector blocks);

  struct MatrixUnit {
    std::size_t block;
    std::size_t row;
    std::size_t col;
  };

  const DimVector& blocks() const noexcept { return blocks_; }
  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t block_size(std::size_t b) const { return static_cast<std::size_t>(blocks_[b]); }
  std::size_t index(std::size_t block, std::size_t row, std::size_t col) const;
  MatrixUnit unit(std::size_t index) const;
  std::string label(std::size_t index) const;
  bool commutative() const;

 private:
  DimVector blocks_;
  std::vector<std::size_t> offsets_;
  std::size_t dimension_ = 0;
};

class AlgState {
 public:
  /// Validates shapes, Hermitian positive semidefinite blocks and total trace 1.
  /// Faithfulness (every block positive definite) is recorded, not required.
  static AlgState from_density(const FinDimAlgebra& a, std::vector<CMatrix> density);
  /// Q_i = 1 / (k_1 + ... + k_n): equal weight on every minimal projection.
  static AlgState normalized_trace(const FinDimAlgebra& a);
  /// Q_i = (k_i / dim A) 1.
  static AlgState plancherel_trace(const FinDimAlgebra& a);
  /// Commutative C^n only: Q_i = w_i.
  static AlgState from_weights(const FinDimAlgebra& a, const std::vector<Rational>& weights);

  const std::vector<CMatrix>& density() const noexcept { return density_; }
  bool faithful() const noexcept { return faithful_; }

 private:
  std::vector<CMatrix> density_;
  bool faithful_ = false;
};

/// Gram matrix <e_p, e_q> = w(e_p* e_q). Throws Domain for a non-faithful state.
CMatrix gns_gram(const FinDimAlgebra& a, const AlgState& w);

/// mu mu* as a matrix acting on coordinates in the matrix-unit basis.
CMatrix mu_mu_star(const FinDimAlgebra& a, const AlgState& w);

/// True when the operator M is self-adjoint for the inner product with Gram matrix G,
/// i.e. G M is Hermitian.
bool is_self_adjoint_for(const CMatrix& gram, const CMatrix& op);

struct DeltaFormResult {
  bool is_delta_form = false;
  Rational delta_squared;  // valid when is_delta_form
  double delta = 0.0;
  std::optional<std::size_t> witness;  // basis vector e with mu mu* e != lambda e
  std::string witness_label;
  std::vector<ComplexRational> witness_image;  // mu mu* applied to the witness
};

DeltaFormResult is_delta_form(const FinDimAlgebra& a, const AlgState& w);

}  // namespace qautk

#endif  // QAUTK_FINDIM_CSTAR_HPP_

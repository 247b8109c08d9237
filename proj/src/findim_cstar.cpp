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

#include "findim_cstar.hpp"

#include <cmath>
#include <utility>

#include "error.hpp"
#include "field_linalg.hpp"

namespace qautk {

FinDimAlgebra::FinDimAlgebra(DimVector blocks) : blocks_(std::move(blocks)) {
  for (std::size_t b = 0; b < blocks_.n(); ++b) {
    offsets_.push_back(dimension_);
    dimension_ += block_size(b) * block_size(b);
  }
}

std::size_t FinDimAlgebra::index(std::size_t block, std::size_t row, std::size_t col) const {
  return offsets_[block] + row * block_size(block) + col;
}

FinDimAlgebra::MatrixUnit FinDimAlgebra::unit(std::size_t index) const {
  std::size_t b = offsets_.size() - 1;
  while (offsets_[b] > index) --b;
  const std::size_t k = block_size(b);
  const std::size_t local = index - offsets_[b];
  return {b, local / k, local % k};
}

std::string FinDimAlgebra::label(std::size_t index) const {
  const auto u = unit(index);
  return "block " + std::to_string(u.block) + " e(" + std::to_string(u.row) + "," +
         std::to_string(u.col) + ")";
}

bool FinDimAlgebra::commutative() const {
  for (auto k : blocks_.blocks())
    if (k != 1) return false;
  return true;
}

AlgState AlgState::from_density(const FinDimAlgebra& a, std::vector<CMatrix> density) {
  if (density.size() != a.blocks().n()) {
    fail(ErrorKind::InvalidArgument, "expected " + std::to_string(a.blocks().n()) +
                                         " density blocks, got " + std::to_string(density.size()));
  }
  AlgState s;
  s.faithful_ = true;
  ComplexRational total;
  for (std::size_t b = 0; b < density.size(); ++b) {
    const std::size_t k = a.block_size(b);
    const CMatrix& q = density[b];
    bool square = q.size() == k;
    for (const auto& row : q) square = square && row.size() == k;
    if (!square) {
      fail(ErrorKind::InvalidArgument, "density block " + std::to_string(b) + " must be " +
                                           std::to_string(k) + "x" + std::to_string(k));
    }
    if (!is_hermitian(q)) fail(ErrorKind::InvalidArgument, "density block " + std::to_string(b) + " is not Hermitian");
    switch (classify_hermitian(q)) {
      case Definiteness::Indefinite:
        fail(ErrorKind::InvalidArgument, "density block " + std::to_string(b) + " is not positive");
      case Definiteness::PositiveSemidefinite:
        s.faithful_ = false;
        break;
      case Definiteness::PositiveDefinite:
        break;
    }
    total = total + trace(q);
  }
  if (!(total == ComplexRational(1))) {
    fail(ErrorKind::InvalidArgument, "density must have total trace 1, got " + total.to_string());
  }
  s.density_ = std::move(density);
  return s;
}

AlgState AlgState::normalized_trace(const FinDimAlgebra& a) {
  Rational total = 0;
  for (auto k : a.blocks().blocks()) total += static_cast<unsigned long>(k);
  std::vector<CMatrix> q;
  for (std::size_t b = 0; b < a.blocks().n(); ++b)
    q.push_back(cmatrix_identity(a.block_size(b), ComplexRational(Rational(1) / total)));
  return from_density(a, std::move(q));
}

AlgState AlgState::plancherel_trace(const FinDimAlgebra& a) {
  const Rational dim(a.blocks().algebra_dimension());
  std::vector<CMatrix> q;
  for (std::size_t b = 0; b < a.blocks().n(); ++b) {
    const Rational w = Rational(static_cast<unsigned long>(a.block_size(b))) / dim;
    q.push_back(cmatrix_identity(a.block_size(b), ComplexRational(w)));
  }
  return from_density(a, std::move(q));
}

AlgState AlgState::from_weights(const FinDimAlgebra& a, const std::vector<Rational>& weights) {
  if (!a.commutative()) fail(ErrorKind::InvalidArgument, "weights describe states on C^n only");
  std::vector<CMatrix> q;
  for (const auto& w : weights) q.push_back(CMatrix{{ComplexRational(w)}});
  return from_density(a, std::move(q));
}

CMatrix gns_gram(const FinDimAlgebra& a, const AlgState& w) {
  if (!w.faithful()) fail(ErrorKind::Domain, "state is not faithful; the GNS form is degenerate");
  const std::size_t d = a.dimension();
  CMatrix g(d, std::vector<ComplexRational>(d));
  // <e_ij, e_kl> = w(e_ji e_kl) = delta_ik w(e_jl) = delta_ik Q[l][j].
  for (std::size_t b = 0; b < a.blocks().n(); ++b) {
    const std::size_t k = a.block_size(b);
    const CMatrix& q = w.density()[b];
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) g[a.index(b, i, j)][a.index(b, i, l)] = q[l][j];
  }
  return g;
}

CMatrix mu_mu_star(const FinDimAlgebra& a, const AlgState& w) {
  const CMatrix g = gns_gram(a, w);
  const std::size_t d = a.dimension();

  // Gram is block diagonal over the summands; invert each block.
  CMatrix ginv(d, std::vector<ComplexRational>(d));
  for (std::size_t b = 0; b < a.blocks().n(); ++b) {
    const std::size_t k = a.block_size(b);
    const std::size_t off = a.index(b, 0, 0);
    FieldRows<ComplexRational> blk(k * k, std::vector<ComplexRational>(k * k));
    for (std::size_t i = 0; i < k * k; ++i)
      for (std::size_t j = 0; j < k * k; ++j) blk[i][j] = g[off + i][off + j];
    auto inv = invert(blk);
    if (!inv) fail(ErrorKind::Domain, "GNS Gram matrix is singular");
    for (std::size_t i = 0; i < k * k; ++i)
      for (std::size_t j = 0; j < k * k; ++j) ginv[off + i][off + j] = (*inv)[i][j];
  }

  // mu* = (G^-1 (x) G^-1) mu^T G, so mu mu* = N G with
  // N[p][r] = sum over factorizations p = x y, r = u v of G^-1[x][u] G^-1[y][v].
  // Factorizations of e^{(b)}_{il} are e_ij e_jl for j < k_b.
  CMatrix n(d, std::vector<ComplexRational>(d));
  for (std::size_t b = 0; b < a.blocks().n(); ++b) {
    const std::size_t k = a.block_size(b);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l) {
        const std::size_t p = a.index(b, i, l);
        for (std::size_t i2 = 0; i2 < k; ++i2)
          for (std::size_t l2 = 0; l2 < k; ++l2) {
            const std::size_t r = a.index(b, i2, l2);
            ComplexRational acc;
            for (std::size_t j = 0; j < k; ++j)
              for (std::size_t j2 = 0; j2 < k; ++j2) {
                const auto& x = ginv[a.index(b, i, j)][a.index(b, i2, j2)];
                const auto& y = ginv[a.index(b, j, l)][a.index(b, j2, l2)];
                if (!is_zero(x) && !is_zero(y)) acc = acc + x * y;
              }
            n[p][r] = acc;
          }
      }
  }
  return multiply(n, g);
}

bool is_self_adjoint_for(const CMatrix& gram, const CMatrix& op) {
  return is_hermitian(multiply(gram, op));
}

DeltaFormResult is_delta_form(const FinDimAlgebra& a, const AlgState& w) {
  const CMatrix m = mu_mu_star(a, w);
  const std::size_t d = a.dimension();
  DeltaFormResult res;
  const ComplexRational lambda = m[0][0];
  auto mark = [&](std::size_t q) {
    res.witness = q;
    res.witness_label = a.label(q);
    for (std::size_t p = 0; p < d; ++p) res.witness_image.push_back(m[p][q]);
  };
  if (!lambda.is_real() || sgn(lambda.re) <= 0) {
    mark(0);
    return res;
  }
  for (std::size_t q = 0; q < d; ++q) {
    for (std::size_t p = 0; p < d; ++p) {
      const ComplexRational expect = p == q ? lambda : ComplexRational();
      if (!(m[p][q] == expect)) {
        mark(q);
        return res;
      }
    }
  }
  res.is_delta_form = true;
  res.delta_squared = lambda.re;
  res.delta = std::sqrt(lambda.re.get_d());
  return res;
}

}  // namespace qautk

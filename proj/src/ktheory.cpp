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

#include "ktheory.hpp"

#include "smith.hpp"

namespace qautk {

IntMatrix boundary_matrix(const DimVector& k) {
  const std::size_t n = k.n();
  IntMatrix m(n * n + 1, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt ki(static_cast<unsigned long>(k[i]));
    for (std::size_t j = 0; j < n; ++j) {
      m(i * n + j, i) = static_cast<unsigned long>(k[j]);
      m(i * n + j, n + j) = -ki;
    }
    m(n * n, i) = -ki;
    m(n * n, n + i) = ki;
  }
  return m;
}

KTheoryResult k_theory(const DimVector& k) {
  KTheoryResult res;
  res.boundary = boundary_matrix(k);
  res.k0 = cokernel(res.boundary);
  const auto kernel = kernel_basis(res.boundary);
  res.k1 = FgAbelianGroup::free(kernel.size());
  if (kernel.size() == 1) res.kernel_generator = kernel.front();
  if (k.below_theorem_scope()) res.warnings.push_back(k.scope_warning());
  return res;
}

std::pair<FgAbelianGroup, FgAbelianGroup> closed_form(const DimVector& k) {
  const std::size_t n = k.n();
  const BigInt d = k.gcd();
  std::vector<BigInt> torsion(2 * n - 1, d);
  return {FgAbelianGroup((n - 1) * (n - 1) + 1, std::move(torsion)), FgAbelianGroup::free(1)};
}

bool verify_theorem(const DimVector& k) {
  const auto computed = k_theory(k);
  const auto [k0, k1] = closed_form(k);
  return fg_group_isomorphic(computed.k0, k0) && fg_group_isomorphic(computed.k1, k1);
}

IntVector expected_kernel_generator(const DimVector& k) {
  const BigInt d = k.gcd();
  IntVector v(2 * k.n());
  for (std::size_t i = 0; i < k.n(); ++i) {
    BigInt q = BigInt(static_cast<unsigned long>(k[i])) / d;
    v[i] = q;
    v[k.n() + i] = q;
  }
  return v;
}

}  // namespace qautk

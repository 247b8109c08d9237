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


#include "magic.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "error.hpp"
#include "smith.hpp"

namespace qautk {

MagicMatrix::MagicMatrix(IntMatrix entries) : u_(std::move(entries)) {
  if (u_.rows() != u_.cols()) fail(ErrorKind::InvalidArgument, "magic matrix must be square");
  if (!satisfies_relations(u_)) fail(ErrorKind::InvalidArgument, "matrix violates the magic unitary relations");
}

bool MagicMatrix::satisfies_relations(const IntMatrix& u) {
  if (u.rows() != u.cols()) return false;
  const std::size_t n = u.rows();
  for (std::size_t i = 0; i < n; ++i) {
    BigInt row = 0, col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (u(i, j) * u(i, j) != u(i, j)) return false;
      row += u(i, j);
      col += u(j, i);
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

MagicMatrix permutation_to_magic(std::span<const std::size_t> sigma) {
  const std::size_t n = sigma.size();
  std::vector<bool> hit(n, false);
  for (auto v : sigma) {
    if (v >= n || hit[v]) fail(ErrorKind::InvalidArgument, "permutation is not a bijection of {0..n-1}");
    hit[v] = true;
  }
  IntMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i) u(i, sigma[i]) = 1;
  return MagicMatrix(std::move(u));
}

IntMatrix evaluation_matrix(std::size_t n, std::size_t max_n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "n must be at least 1");
  if (n > max_n) {
    fail(ErrorKind::InvalidArgument, "n = " + std::to_string(n) + " exceeds the cap " + std::to_string(max_n));
  }
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  IntMatrix m(perms.size(), n * n + 1);
  for (std::size_t r = 0; r < perms.size(); ++r) {
    m(r, 0) = 1;
    for (std::size_t i = 0; i < n; ++i) m(r, 1 + i * n + perms[r][i]) = 1;
  }
  return m;
}

GeneratorRank generator_rank(std::size_t n, std::size_t max_n) {
  const IntMatrix full = evaluation_matrix(n, max_n);
  std::vector<std::size_t> cols{0};
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) cols.push_back(1 + i * n + j);
  const IntMatrix restricted = full.select_columns(cols);

  GeneratorRank out;
  out.n = n;
  out.full_rank = integer_rank(full);
  const SmithDecomposition snf = smith_normal_form(restricted);
  out.restricted_rank = snf.rank;
  out.saturated = std::all_of(snf.invariant_factors.begin(), snf.invariant_factors.begin() + snf.rank,
                              [](const BigInt& f) { return f == 1; });
  out.spans_equal = true;
  for (std::size_t c = 0; c < full.cols() && out.spans_equal; ++c) {
    if (!solve_integer(snf, full.column(c))) out.spans_equal = false;
  }
  return out;
}

}  // namespace qautk

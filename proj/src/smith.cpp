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

#include "smith.hpp"

#include <algorithm>
#include <utility>

#include "error.hpp"

namespace qautk {

namespace {

// Elimination state for the Smith reduction. Row operations are mirrored on U and column
// operations on V when those are tracked.
class SmithEngine {
 public:
  SmithEngine(const IntMatrix& a, bool track)
      : a_(a), m_(a.rows()), n_(a.cols()), track_(track) {
    if (track_) {
      u_ = IntMatrix::identity(m_);
      v_ = IntMatrix::identity(n_);
    }
  }

  void run() {
    const std::size_t steps = std::min(m_, n_);
    for (std::size_t t = 0; t < steps; ++t) {
      if (!reduce_pivot(t)) break;
      if (sgn(a_(t, t)) < 0) negate_row(t);
    }
  }

  SmithDecomposition result() && {
    SmithDecomposition out;
    const std::size_t steps = std::min(m_, n_);
    out.invariant_factors.resize(steps);
    for (std::size_t i = 0; i < steps; ++i) {
      out.invariant_factors[i] = a_(i, i);
      if (sgn(a_(i, i)) != 0) ++out.rank;
    }
    out.S = std::move(a_);
    out.U = std::move(u_);
    out.V = std::move(v_);
    return out;
  }

 private:
  // Minimal nonzero |entry| in the trailing submatrix; false if the submatrix is zero.
  bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    const mpz_class* best = nullptr;
    for (std::size_t i = t; i < m_; ++i) {
      for (std::size_t j = t; j < n_; ++j) {
        const mpz_class& v = a_(i, j);
        if (sgn(v) == 0) continue;
        if (best == nullptr || mpz_cmpabs(v.get_mpz_t(), best->get_mpz_t()) < 0) {
          best = &v;
          pr = i;
          pc = j;
          if (mpz_cmpabs_ui(v.get_mpz_t(), 1) == 0) return true;
        }
      }
    }
    return best != nullptr;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t c = 0; c < n_; ++c) mpz_swap(a_(i, c).get_mpz_t(), a_(k, c).get_mpz_t());
    if (track_)
      for (std::size_t c = 0; c < m_; ++c) mpz_swap(u_(i, c).get_mpz_t(), u_(k, c).get_mpz_t());
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t r = 0; r < m_; ++r) mpz_swap(a_(r, j).get_mpz_t(), a_(r, k).get_mpz_t());
    if (track_)
      for (std::size_t r = 0; r < n_; ++r) mpz_swap(v_(r, j).get_mpz_t(), v_(r, k).get_mpz_t());
  }

  // row_i -= q * row_t, restricted to columns >= from in A.
  void row_submul(std::size_t i, std::size_t t, const mpz_class& q, std::size_t from) {
    for (std::size_t c = from; c < n_; ++c) {
      if (sgn(a_(t, c)) != 0)
        mpz_submul(a_(i, c).get_mpz_t(), q.get_mpz_t(), a_(t, c).get_mpz_t());
    }
    if (track_) {
      for (std::size_t c = 0; c < m_; ++c) {
        if (sgn(u_(t, c)) != 0)
          mpz_submul(u_(i, c).get_mpz_t(), q.get_mpz_t(), u_(t, c).get_mpz_t());
      }
    }
  }

  void col_submul(std::size_t j, std::size_t t, const mpz_class& q, std::size_t from) {
    for (std::size_t r = from; r < m_; ++r) {
      if (sgn(a_(r, t)) != 0)
        mpz_submul(a_(r, j).get_mpz_t(), q.get_mpz_t(), a_(r, t).get_mpz_t());
    }
    if (track_) {
      for (std::size_t r = 0; r < n_; ++r) {
        if (sgn(v_(r, t)) != 0)
          mpz_submul(v_(r, j).get_mpz_t(), q.get_mpz_t(), v_(r, t).get_mpz_t());
      }
    }
  }

  void row_add(std::size_t t, std::size_t i) {
    for (std::size_t c = t; c < n_; ++c) a_(t, c) += a_(i, c);
    if (track_)
      for (std::size_t c = 0; c < m_; ++c) u_(t, c) += u_(i, c);
  }

  void negate_row(std::size_t t) {
    for (std::size_t c = t; c < n_; ++c) mpz_neg(a_(t, c).get_mpz_t(), a_(t, c).get_mpz_t());
    if (track_)
      for (std::size_t c = 0; c < m_; ++c) mpz_neg(u_(t, c).get_mpz_t(), u_(t, c).get_mpz_t());
  }

  // Brings a pivot to (t, t) that divides everything in the trailing submatrix and clears
  // row t and column t. Returns false when the trailing submatrix is zero.
  bool reduce_pivot(std::size_t t) {
    mpz_class q;
    for (;;) {
      std::size_t pr = t, pc = t;
      if (!find_pivot(t, pr, pc)) return false;
      swap_rows(t, pr);
      swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m_; ++i) {
        if (sgn(a_(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
        if (sgn(q) != 0) row_submul(i, t, q, t);
        if (sgn(a_(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n_; ++j) {
        if (sgn(a_(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
        if (sgn(q) != 0) col_submul(j, t, q, t);
        if (sgn(a_(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any offending row into row t and reduce again.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m_ && divisible; ++i) {
        for (std::size_t j = t + 1; j < n_; ++j) {
          if (sgn(a_(i, j)) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
            row_add(t, i);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) return true;
    }
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
  std::size_t m_;
  std::size_t n_;
  bool track_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SmithEngine engine(a, true);
  engine.run();
  return std::move(engine).result();
}

IntVector invariant_factors(const IntMatrix& a) {
  SmithEngine engine(a, false);
  engine.run();
  return std::move(engine).result().invariant_factors;
}

std::size_t integer_rank(const IntMatrix& a) {
  std::size_t r = 0;
  for (const auto& d : invariant_factors(a))
    if (sgn(d) != 0) ++r;
  return r;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  auto row_submul = [&](std::size_t i, std::size_t k, const mpz_class& q) {
    for (std::size_t c = 0; c < n; ++c)
      if (sgn(h(k, c)) != 0) mpz_submul(h(i, c).get_mpz_t(), q.get_mpz_t(), h(k, c).get_mpz_t());
  };
  auto swap_rows = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t c = 0; c < n; ++c) mpz_swap(h(i, c).get_mpz_t(), h(k, c).get_mpz_t());
  };

  std::size_t r = 0;
  mpz_class q;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclid on column c among rows r..m-1.
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        if (best == m || mpz_cmpabs(h(i, c).get_mpz_t(), h(best, c).get_mpz_t()) < 0) best = i;
      }
      if (best == m) break;
      swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        row_submul(i, r, q);
        if (sgn(h(i, c)) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(h(r, c)) == 0) continue;
    if (sgn(h(r, c)) < 0)
      for (std::size_t k = 0; k < n; ++k) mpz_neg(h(r, k).get_mpz_t(), h(r, k).get_mpz_t());
    for (std::size_t i = 0; i < r; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (sgn(q) != 0) row_submul(i, r, q);
    }
    ++r;
  }
  std::vector<std::size_t> rows(r);
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < r; ++i) rows[i] = i;
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  return h.select(rows, cols);
}

std::vector<IntVector> kernel_lattice(const SmithDecomposition& snf) {
  std::vector<IntVector> out;
  for (std::size_t j = snf.rank; j < snf.V.cols(); ++j) out.push_back(snf.V.column(j));
  return out;
}

std::vector<IntVector> kernel_basis(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  const auto raw = kernel_lattice(snf);
  if (raw.empty()) return {};
  std::vector<BigInt> flat;
  for (const auto& v : raw) flat.insert(flat.end(), v.begin(), v.end());
  const IntMatrix h = hermite_normal_form(IntMatrix(raw.size(), a.cols(), std::move(flat)));
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < h.rows(); ++i) out.emplace_back(h.row(i).begin(), h.row(i).end());
  return out;
}

FgAbelianGroup cokernel(const IntMatrix& a) {
  const auto factors = invariant_factors(a);
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
  for (const auto& d : factors) {
    if (sgn(d) == 0) continue;
    ++rank;
    if (d > 1) torsion.push_back(d);
  }
  return FgAbelianGroup(a.rows() - rank, std::move(torsion));
}

std::optional<IntVector> solve_integer(const SmithDecomposition& snf, std::span<const BigInt> b) {
  if (b.size() != snf.U.cols()) fail(ErrorKind::InvalidArgument, "right-hand side has wrong length");
  const IntVector y = snf.U.apply(b);
  IntVector z(snf.V.rows());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < snf.rank) {
      const BigInt& d = snf.invariant_factors[i];
      if (!mpz_divisible_p(y[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      mpz_divexact(z[i].get_mpz_t(), y[i].get_mpz_t(), d.get_mpz_t());
    } else if (sgn(y[i]) != 0) {
      return std::nullopt;
    }
  }
  return snf.V.apply(z);
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const BigInt det = m.determinant();
  return det == 1 || det == -1;
}

}  // namespace qautk

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

#ifndef QAUTK_FIELD_LINALG_HPP_
#define QAUTK_FIELD_LINALG_HPP_

// Gauss-Jordan elimination over an exact field. T needs +, -, *, and the free functions
// is_zero(x), inverse(x), zero_like(x), one_like(x) found by ADL (or below for mpq_class).

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace qautk {

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline mpq_class inverse(const mpq_class& x) { return 1 / x; }
inline mpq_class zero_like(const mpq_class&) { return 0; }
inline mpq_class one_like(const mpq_class&) { return 1; }

template <typename T>
using FieldRows = std::vector<std::vector<T>>;

/// In-place reduced row echelon form. Returns the pivot columns.
template <typename T>
std::vector<std::size_t> rref(FieldRows<T>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const T inv = inverse(m[r][c]);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      const T f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!is_zero(m[r][j])) m[i][j] = m[i][j] - f * m[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <typename T>
std::size_t field_rank(FieldRows<T> m) {
  return rref(m).size();
}

/// Basis of {x : M x = 0}; `zero` fixes the field when M has no rows.
template <typename T>
std::vector<std::vector<T>> nullspace(FieldRows<T> m, std::size_t cols, const T& zero) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(cols, zero);
    v[f] = one_like(zero);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = zero - m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with M x = b, if the system is consistent.
template <typename T>
std::optional<std::vector<T>> solve_linear(const FieldRows<T>& a, const std::vector<T>& b,
                                           std::size_t cols, const T& zero) {
  FieldRows<T> aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<T> x(cols, zero);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

template <typename T>
std::optional<FieldRows<T>> invert(const FieldRows<T>& a) {
  const std::size_t n = a.size();
  if (n == 0) return FieldRows<T>{};
  const T zero = zero_like(a[0][0]);
  FieldRows<T> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    aug[i] = a[i];
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? one_like(zero) : zero);
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  FieldRows<T> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(aug[i].begin() + n, aug[i].end());
  return out;
}

}  // namespace qautk

#endif  // QAUTK_FIELD_LINALG_HPP_

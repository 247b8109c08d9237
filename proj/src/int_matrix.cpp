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

#include "int_matrix.hpp"

#include <sstream>
#include <utility>

#include "error.hpp"

namespace qautk {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    fail(ErrorKind::InvalidArgument, "matrix entry count " + std::to_string(data_.size()) +
                                         " does not match shape " + std::to_string(rows) + "x" +
                                         std::to_string(cols));
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) fail(ErrorKind::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const BigInt> diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::select(std::span<const std::size_t> row_idx,
                            std::span<const std::size_t> col_idx) const {
  IntMatrix m(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) m(i, j) = (*this)(row_idx[i], col_idx[j]);
  return m;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> col_idx) const {
  std::vector<std::size_t> all(rows_);
  for (std::size_t i = 0; i < rows_; ++i) all[i] = i;
  return select(all, col_idx);
}

IntVector IntMatrix::apply(std::span<const BigInt> x) const {
  if (x.size() != cols_) fail(ErrorKind::InvalidArgument, "vector length does not match matrix");
  IntVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    BigInt acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn(x[c]) != 0) acc += (*this)(r, c) * x[c];
    }
    y[r] = std::move(acc);
  }
  return y;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (sgn(v) != 0) return false;
  return true;
}

BigInt IntMatrix::determinant() const {
  if (rows_ != cols_) fail(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
    }
    prev = a(k, k);
  }
  BigInt det = a(n - 1, n - 1);
  return sign > 0 ? det : BigInt(-det);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::InvalidArgument, "matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

IntMatrix parse_matrix_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long rows = -1;
  long long cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) {
    fail(ErrorKind::Parse, "matrix text must start with \"rows cols\"");
  }
  std::vector<BigInt> entries;
  entries.reserve(static_cast<std::size_t>(rows * cols));
  std::string token;
  while (in >> token) {
    BigInt v;
    if (v.set_str(token, 10) != 0) fail(ErrorKind::Parse, "not an integer: \"" + token + "\"");
    entries.push_back(std::move(v));
  }
  if (entries.size() != static_cast<std::size_t>(rows * cols)) {
    fail(ErrorKind::Parse, "expected " + std::to_string(rows * cols) + " matrix entries, found " +
                               std::to_string(entries.size()));
  }
  return IntMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                   std::move(entries));
}

std::string format_matrix_text(const IntMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m(r, c).get_str();
    }
    out << '\n';
  }
  return out.str();
}

BigInt gcd_of(std::span<const BigInt> values) {
  BigInt g = 0;
  for (const auto& v : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

}  // namespace qautk

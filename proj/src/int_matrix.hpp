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

#ifndef QAUTK_INT_MATRIX_HPP_
#define QAUTK_INT_MATRIX_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qautk {

using BigInt = mpz_class;
using IntVector = std::vector<BigInt>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntMatrix diagonal(std::span<const BigInt> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const BigInt> entries() const noexcept { return data_; }
  std::span<const BigInt> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  IntVector column(std::size_t c) const;

  IntMatrix transpose() const;
  IntMatrix select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
  IntMatrix select_columns(std::span<const std::size_t> col_idx) const;

  IntVector apply(std::span<const BigInt> x) const;
  bool is_zero() const;

  /// Exact determinant by fraction-free (Bareiss) elimination.
  BigInt determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Reads the text format: a "rows cols" header followed by whitespace-separated integers.
IntMatrix parse_matrix_text(std::string_view text);
std::string format_matrix_text(const IntMatrix& m);

BigInt gcd_of(std::span<const BigInt> values);

}  // namespace qautk

#endif  // QAUTK_INT_MATRIX_HPP_

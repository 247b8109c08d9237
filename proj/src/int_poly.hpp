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

#ifndef QAUTK_INT_POLY_HPP_
#define QAUTK_INT_POLY_HPP_

#include <initializer_list>
#include <string>
#include <vector>

#include "int_matrix.hpp"

namespace qautk {

/// Polynomial with integer coefficients, stored low degree first with no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }
  static IntPoly monomial(std::size_t degree, const BigInt& c = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& c, const IntPoly& p);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace qautk

#endif  // QAUTK_INT_POLY_HPP_

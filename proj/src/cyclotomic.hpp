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

#ifndef QAUTK_CYCLOTOMIC_HPP_
#define QAUTK_CYCLOTOMIC_HPP_

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "int_matrix.hpp"
#include "rational_complex.hpp"

namespace qautk {

/// Q(zeta_N) as Q[x] / Phi_N(x). Elements are stored reduced, so equality is coefficientwise.
class CyclotomicField {
 public:
  explicit CyclotomicField(unsigned order);

  unsigned order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return modulus_.size() - 1; }
  /// Coefficients of Phi_N, low degree first (monic).
  const std::vector<BigInt>& modulus() const noexcept { return modulus_; }
  /// zeta^a reduced, for any integer a.
  const std::vector<Rational>& power(long a) const;
  /// Reduces a polynomial in zeta of any degree.
  std::vector<Rational> reduce(std::vector<Rational> poly) const;

 private:
  unsigned order_;
  std::vector<BigInt> modulus_;
  std::vector<std::vector<Rational>> powers_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

FieldPtr cyclotomic_field(unsigned order);
/// Integer coefficients of the N-th cyclotomic polynomial.
std::vector<BigInt> cyclotomic_polynomial(unsigned order);

class Cyclotomic {
 public:
  explicit Cyclotomic(FieldPtr field);
  Cyclotomic(FieldPtr field, const Rational& value);

  static Cyclotomic root(FieldPtr field, long exponent);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  bool is_zero() const;
  Cyclotomic conj() const;
  bool is_real() const { return *this == conj(); }
  std::optional<Rational> as_rational() const;
  /// a in [0, N) with *this == zeta^a, if any.
  std::optional<unsigned> root_exponent() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(FieldPtr field, std::vector<Rational> reduced);
  FieldPtr field_;
  std::vector<Rational> c_;
};

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
Cyclotomic inverse(const Cyclotomic& x);
inline Cyclotomic zero_like(const Cyclotomic& x) { return Cyclotomic(x.field()); }
inline Cyclotomic one_like(const Cyclotomic& x) { return Cyclotomic(x.field(), Rational(1)); }

}  // namespace qautk

#endif  // QAUTK_CYCLOTOMIC_HPP_

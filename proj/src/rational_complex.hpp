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

#ifndef QAUTK_RATIONAL_COMPLEX_HPP_
#define QAUTK_RATIONAL_COMPLEX_HPP_

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace qautk {

using Rational = mpq_class;

/// Element of Q(i).
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit from rationals
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  ComplexRational(long r) : re(r) {}  // NOLINT

  ComplexRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  bool is_real() const { return sgn(im) == 0; }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::string to_string() const;
};

inline bool is_zero(const ComplexRational& x) { return sgn(x.re) == 0 && sgn(x.im) == 0; }
inline ComplexRational inverse(const ComplexRational& x) {
  const Rational n = x.norm();
  return {x.re / n, -x.im / n};
}
inline ComplexRational zero_like(const ComplexRational&) { return {}; }
inline ComplexRational one_like(const ComplexRational&) { return ComplexRational(1); }

/// Rational from "p/q", "p", or a decimal integer; throws Parse otherwise.
Rational parse_rational(const std::string& text);

/// Dense square/rectangular matrix over Q(i), row-major rows.
using CMatrix = std::vector<std::vector<ComplexRational>>;

CMatrix cmatrix_identity(std::size_t n, const ComplexRational& scale = ComplexRational(1));
CMatrix adjoint(const CMatrix& m);
CMatrix multiply(const CMatrix& a, const CMatrix& b);
bool is_hermitian(const CMatrix& m);
ComplexRational trace(const CMatrix& m);

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };

/// Exact classification of a Hermitian matrix by symmetric elimination.
Definiteness classify_hermitian(const CMatrix& m);

}  // namespace qautk

#endif  // QAUTK_RATIONAL_COMPLEX_HPP_

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

#ifndef QAUTK_REPRING_HPP_
#define QAUTK_REPRING_HPP_

// Fusion rules of SU_q(2) and the two modules used by the resolution:
// R(G) = Z[t] (integral spins) and R^w(G) = t^{1/2} Z[t] (half-integral spins), where
// s = [V(1/2)], t = s^2 = [V(0)] + [V(1)].

#include <compare>
#include <map>
#include <string>

#include "int_poly.hpp"

namespace qautk {

/// Spin n in (1/2)N_0, stored as 2n.
struct Spin {
  unsigned twice = 0;

  static constexpr Spin from_twice(unsigned t) { return Spin{t}; }
  constexpr bool integral() const noexcept { return twice % 2 == 0; }
  BigInt dimension() const { return BigInt(twice + 1); }
  std::string to_string() const;

  friend auto operator<=>(const Spin&, const Spin&) = default;
};

enum class Parity { Integral, HalfIntegral };

inline Parity operator+(Parity a, Parity b) {
  return a == b ? Parity::Integral : Parity::HalfIntegral;
}
const char* parity_name(Parity p);

/// t^{e} * poly(t) with e = 0 (integral) or e = 1/2 (half-integral).
class RepRingElement {
 public:
  RepRingElement() = default;
  RepRingElement(Parity parity, IntPoly poly) : parity_(parity), poly_(std::move(poly)) {}

  Parity parity() const noexcept { return parity_; }
  const IntPoly& poly() const noexcept { return poly_; }

  /// Same-parity sum; mixed parity throws.
  friend RepRingElement operator+(const RepRingElement& a, const RepRingElement& b);
  friend RepRingElement operator-(const RepRingElement& a, const RepRingElement& b);
  friend bool operator==(const RepRingElement&, const RepRingElement&) = default;

  std::string to_string() const;

 private:
  Parity parity_ = Parity::Integral;
  IntPoly poly_;
};

/// Finite formal sum of irreducibles with nonnegative multiplicities.
class IrrepSum {
 public:
  IrrepSum() = default;
  explicit IrrepSum(Spin s, const BigInt& mult = 1);

  void add(Spin s, const BigInt& mult);
  BigInt multiplicity(Spin s) const;
  const std::map<unsigned, BigInt>& terms() const noexcept { return mult_; }
  bool empty() const noexcept { return mult_.empty(); }
  BigInt dimension() const;
  std::string to_string() const;

  friend IrrepSum operator+(IrrepSum a, const IrrepSum& b);
  friend bool operator==(const IrrepSum&, const IrrepSum&) = default;

 private:
  std::map<unsigned, BigInt> mult_;  // twice_spin -> multiplicity > 0
};

/// Clebsch-Gordan: V(m) (x) V(n) = sum_{k=|m-n|}^{m+n} V(k).
IrrepSum fusion_tensor(Spin m, Spin n);
/// Bilinear extension of fusion_tensor.
IrrepSum fuse(const IrrepSum& x, const IrrepSum& y);

/// The class of V(j/2) as a polynomial in s = [V(1/2)], via [V(n+1/2)] = s[V(n)] - [V(n-1/2)].
IntPoly irrep_class_in_s(unsigned twice_spin);

RepRingElement irreps_to_polynomial(const IrrepSum& x);
/// Throws Domain on a non-effective element (some negative multiplicity).
IrrepSum polynomial_to_irreps(const RepRingElement& p);

/// R(G) acting on R(G) or R^w(G); `p` must be integral.
RepRingElement module_action(const RepRingElement& p, const RepRingElement& x);

}  // namespace qautk

#endif  // QAUTK_REPRING_HPP_

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

#include "repring.hpp"

#include <utility>
#include <vector>

#include "error.hpp"

namespace qautk {

std::string Spin::to_string() const {
  return integral() ? std::to_string(twice / 2) : std::to_string(twice) + "/2";
}

const char* parity_name(Parity p) { return p == Parity::Integral ? "integral" : "half-integral"; }

RepRingElement operator+(const RepRingElement& a, const RepRingElement& b) {
  if (a.parity_ != b.parity_) fail(ErrorKind::InvalidArgument, "sum of mixed-parity elements");
  return RepRingElement(a.parity_, a.poly_ + b.poly_);
}

RepRingElement operator-(const RepRingElement& a, const RepRingElement& b) {
  if (a.parity_ != b.parity_) fail(ErrorKind::InvalidArgument, "difference of mixed-parity elements");
  return RepRingElement(a.parity_, a.poly_ - b.poly_);
}

std::string RepRingElement::to_string() const {
  if (parity_ == Parity::Integral) return poly_.to_string();
  return "t^(1/2)*(" + poly_.to_string() + ")";
}

IrrepSum::IrrepSum(Spin s, const BigInt& mult) { add(s, mult); }

void IrrepSum::add(Spin s, const BigInt& mult) {
  if (sgn(mult) < 0) fail(ErrorKind::InvalidArgument, "negative multiplicity in IrrepSum");
  if (sgn(mult) == 0) return;
  mult_[s.twice] += mult;
}

BigInt IrrepSum::multiplicity(Spin s) const {
  auto it = mult_.find(s.twice);
  return it == mult_.end() ? BigInt(0) : it->second;
}

BigInt IrrepSum::dimension() const {
  BigInt d = 0;
  for (const auto& [twice, m] : mult_) d += m * (twice + 1);
  return d;
}

std::string IrrepSum::to_string() const {
  if (mult_.empty()) return "0";
  std::string out;
  for (const auto& [twice, m] : mult_) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += m.get_str() + "*";
    out += "V(" + Spin{twice}.to_string() + ")";
  }
  return out;
}

IrrepSum operator+(IrrepSum a, const IrrepSum& b) {
  for (const auto& [twice, m] : b.mult_) a.add(Spin{twice}, m);
  return a;
}

IrrepSum fusion_tensor(Spin m, Spin n) {
  IrrepSum out;
  const unsigned lo = m.twice > n.twice ? m.twice - n.twice : n.twice - m.twice;
  for (unsigned k = lo; k <= m.twice + n.twice; k += 2) out.add(Spin{k}, 1);
  return out;
}

IrrepSum fuse(const IrrepSum& x, const IrrepSum& y) {
  IrrepSum out;
  for (const auto& [a, ma] : x.terms()) {
    for (const auto& [b, mb] : y.terms()) {
      const BigInt w = ma * mb;
      const IrrepSum ab = fusion_tensor(Spin{a}, Spin{b});
      for (const auto& [c, mc] : ab.terms()) out.add(Spin{c}, w * mc);
    }
  }
  return out;
}

IntPoly irrep_class_in_s(unsigned twice_spin) {
  const IntPoly s = IntPoly::monomial(1);
  IntPoly prev;                // [V(-1/2)] = 0
  IntPoly cur = IntPoly{1};    // [V(0)]
  for (unsigned j = 0; j < twice_spin; ++j) {
    IntPoly next = s * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RepRingElement irreps_to_polynomial(const IrrepSum& x) {
  if (x.empty()) return RepRingElement(Parity::Integral, IntPoly{});
  const bool integral = Spin{x.terms().begin()->first}.integral();
  std::vector<BigInt> in_t;
  for (const auto& [twice, m] : x.terms()) {
    if (Spin{twice}.integral() != integral) {
      fail(ErrorKind::InvalidArgument, "IrrepSum mixes integral and half-integral spins");
    }
    // P_j(s) has only powers s^{j}, s^{j-2}, ...; s^{2i+e} maps to t^i.
    const IntPoly in_s = irrep_class_in_s(twice);
    for (std::size_t p = integral ? 0 : 1; p < in_s.coefficients().size(); p += 2) {
      const std::size_t i = p / 2;
      if (in_t.size() <= i) in_t.resize(i + 1);
      in_t[i] += m * in_s.coefficients()[p];
    }
  }
  return RepRingElement(integral ? Parity::Integral : Parity::HalfIntegral, IntPoly(std::move(in_t)));
}

IrrepSum polynomial_to_irreps(const RepRingElement& p) {
  const unsigned shift = p.parity() == Parity::Integral ? 0 : 1;
  // Rewrite in s: t^i -> s^{2i + shift}.
  std::vector<BigInt> in_s;
  for (std::size_t i = 0; i < p.poly().coefficients().size(); ++i) {
    const std::size_t deg = 2 * i + shift;
    if (in_s.size() <= deg) in_s.resize(deg + 1);
    in_s[deg] = p.poly().coefficients()[i];
  }
  IntPoly rest(std::move(in_s));
  IrrepSum out;
  // Each P_j is monic of degree j, so peel the leading term.
  while (!rest.is_zero()) {
    const auto j = static_cast<unsigned>(rest.degree());
    const BigInt c = rest.coefficient(j);
    if (sgn(c) < 0) {
      fail(ErrorKind::Domain, "non-effective element: multiplicity " + c.get_str() + " at V(" +
                                  Spin{j}.to_string() + ")");
    }
    out.add(Spin{j}, c);
    rest -= c * irrep_class_in_s(j);
  }
  return out;
}

RepRingElement module_action(const RepRingElement& p, const RepRingElement& x) {
  if (p.parity() != Parity::Integral) {
    fail(ErrorKind::InvalidArgument, "module action requires an integral ring element");
  }
  return RepRingElement(x.parity(), p.poly() * x.poly());
}

}  // namespace qautk

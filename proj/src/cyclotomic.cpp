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

#include "cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "error.hpp"
#include "field_linalg.hpp"

namespace qautk {

namespace {

// Exact quotient of a by the monic polynomial b.
std::vector<BigInt> divide_exact(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<BigInt> q(a.size() - db);
  for (std::size_t k = a.size(); k-- > db;) {
    const BigInt c = a[k];
    q[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  return q;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(unsigned order) {
  if (order == 0) fail(ErrorKind::InvalidArgument, "cyclotomic order must be positive");
  std::vector<BigInt> p(order + 1);
  p[0] = -1;
  p[order] = 1;
  for (unsigned d = 1; d < order; ++d) {
    if (order % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

CyclotomicField::CyclotomicField(unsigned order)
    : order_(order), modulus_(cyclotomic_polynomial(order)) {
  powers_.reserve(order_);
  for (unsigned a = 0; a < order_; ++a) {
    std::vector<Rational> x(a + 1);
    x[a] = 1;
    powers_.push_back(reduce(std::move(x)));
  }
}

const std::vector<Rational>& CyclotomicField::power(long a) const {
  long r = a % static_cast<long>(order_);
  if (r < 0) r += order_;
  return powers_[static_cast<std::size_t>(r)];
}

std::vector<Rational> CyclotomicField::reduce(std::vector<Rational> poly) const {
  const std::size_t phi = degree();
  for (std::size_t k = poly.size(); k-- > phi;) {
    if (sgn(poly[k]) == 0) continue;
    const Rational c = poly[k];
    for (std::size_t i = 0; i <= phi; ++i) poly[k - phi + i] -= c * modulus_[i];
  }
  poly.resize(phi);
  return poly;
}

FieldPtr cyclotomic_field(unsigned order) { return std::make_shared<const CyclotomicField>(order); }

Cyclotomic::Cyclotomic(FieldPtr field) : field_(std::move(field)), c_(field_->degree()) {}

Cyclotomic::Cyclotomic(FieldPtr field, const Rational& value) : Cyclotomic(std::move(field)) {
  if (!c_.empty()) c_[0] = value;
}

Cyclotomic::Cyclotomic(FieldPtr field, std::vector<Rational> reduced)
    : field_(std::move(field)), c_(std::move(reduced)) {}

Cyclotomic Cyclotomic::root(FieldPtr field, long exponent) {
  auto c = field->power(exponent);
  return Cyclotomic(std::move(field), std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& v : c_)
    if (sgn(v) != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    const auto& p = field_->power(-static_cast<long>(k));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c_[k] * p[i];
  }
  return Cyclotomic(field_, std::move(out));
}

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) return std::nullopt;
  return c_.empty() ? Rational(0) : c_[0];
}

std::optional<unsigned> Cyclotomic::root_exponent() const {
  for (unsigned a = 0; a < field_->order(); ++a)
    if (c_ == field_->power(a)) return a;
  return std::nullopt;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  const double step = 2.0 * std::numbers::pi / field_->order();
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) != 0) z += c_[k].get_d() * std::polar(1.0, step * static_cast<double>(k));
  }
  return z;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    if (!out.empty()) out += " + ";
    out += c_[k].get_str();
    if (k > 0) out += "*z" + std::to_string(field_->order()) + "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

namespace {
void require_same_field(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field()->order() != b.field()->order()) {
    fail(ErrorKind::InvalidArgument, "cyclotomic elements from different fields");
  }
}
}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  require_same_field(a, b);
  std::vector<Rational> c = a.c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
  return Cyclotomic(a.field_, std::move(c));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  require_same_field(a, b);
  std::vector<Rational> c = a.c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
  return Cyclotomic(a.field_, std::move(c));
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  require_same_field(a, b);
  const std::size_t phi = a.c_.size();
  if (phi == 0) return a;
  std::vector<Rational> prod(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < phi; ++j)
      if (sgn(b.c_[j]) != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  return Cyclotomic(a.field_, a.field_->reduce(std::move(prod)));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.field_->order() == b.field_->order() && a.c_ == b.c_;
}

Cyclotomic inverse(const Cyclotomic& x) {
  if (x.is_zero()) fail(ErrorKind::Domain, "inverse of zero in a cyclotomic field");
  const auto& f = x.field();
  const std::size_t phi = f->degree();
  // Columns are x * zeta^i; solve for the coordinates of 1.
  FieldRows<Rational> m(phi, std::vector<Rational>(phi));
  for (std::size_t i = 0; i < phi; ++i) {
    const Cyclotomic col = x * Cyclotomic::root(f, static_cast<long>(i));
    for (std::size_t r = 0; r < phi; ++r) m[r][i] = col.coefficients()[r];
  }
  std::vector<Rational> one(phi);
  one[0] = 1;
  auto y = solve_linear(m, one, phi, Rational(0));
  if (!y) fail(ErrorKind::Inconsistent, "cyclotomic inverse failed");
  Cyclotomic out(f);
  for (std::size_t i = 0; i < phi; ++i) {
    if (sgn((*y)[i]) != 0) out = out + Cyclotomic(f, (*y)[i]) * Cyclotomic::root(f, static_cast<long>(i));
  }
  return out;
}

}  // namespace qautk

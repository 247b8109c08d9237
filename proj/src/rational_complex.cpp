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

#include "rational_complex.hpp"

#include "error.hpp"

namespace qautk {

std::string ComplexRational::to_string() const {
  if (sgn(im) == 0) return re.get_str();
  if (sgn(re) == 0) return im.get_str() + "i";
  return re.get_str() + (sgn(im) > 0 ? "+" : "") + im.get_str() + "i";
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) fail(ErrorKind::Parse, "not a rational number: \"" + text + "\"");
  if (sgn(q.get_den()) == 0) fail(ErrorKind::Parse, "zero denominator in \"" + text + "\"");
  q.canonicalize();
  return q;
}

CMatrix cmatrix_identity(std::size_t n, const ComplexRational& scale) {
  CMatrix m(n, std::vector<ComplexRational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = scale;
  return m;
}

CMatrix adjoint(const CMatrix& m) {
  if (m.empty()) return {};
  CMatrix out(m.front().size(), std::vector<ComplexRational>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j].conj();
  return out;
}

CMatrix multiply(const CMatrix& a, const CMatrix& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), m = b.front().size();
  if (a.front().size() != k) fail(ErrorKind::InvalidArgument, "matrix product shape mismatch");
  CMatrix out(n, std::vector<ComplexRational>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!is_zero(b[l][j])) out[i][j] = out[i][j] + a[i][l] * b[l][j];
    }
  return out;
}

bool is_hermitian(const CMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (std::size_t j = 0; j <= i; ++j)
      if (!(m[i][j] == m[j][i].conj())) return false;
  }
  return true;
}

ComplexRational trace(const CMatrix& m) {
  ComplexRational t;
  for (std::size_t i = 0; i < m.size(); ++i) t = t + m[i][i];
  return t;
}

Definiteness classify_hermitian(const CMatrix& m) {
  CMatrix a = m;
  const std::size_t n = a.size();
  bool semidefinite = false;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational pivot = a[k][k].re;
    if (sgn(pivot) < 0) return Definiteness::Indefinite;
    if (sgn(pivot) == 0) {
      // A PSD matrix with a zero diagonal entry has that whole row zero.
      for (std::size_t j = k + 1; j < n; ++j)
        if (!is_zero(a[k][j])) return Definiteness::Indefinite;
      semidefinite = true;
      continue;
    }
    const ComplexRational inv = inverse(ComplexRational(pivot));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(a[i][k])) continue;
      const ComplexRational f = a[i][k] * inv;
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
    }
  }
  return semidefinite ? Definiteness::PositiveSemidefinite : Definiteness::PositiveDefinite;
}

}  // namespace qautk

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

#include "resolution.hpp"

#include <algorithm>
#include <utility>

#include "error.hpp"
#include "smith.hpp"

namespace qautk {

const char* test_object_name(TestObject t) { return t == TestObject::Scalars ? "C" : "A"; }

ResolutionDiagram resolution_diagram(const DimVector& k) {
  const std::size_t n = k.n();
  ResolutionDiagram d;
  d.source.assign(n, ObjectKind::Scalars);
  d.source.push_back(ObjectKind::Algebra);
  d.target.assign(n, ObjectKind::Algebra);
  d.target.push_back(ObjectKind::Scalars);
  d.d1.resize((n + 1) * (n + 1));
  auto at = [&](std::size_t r, std::size_t c) -> KKEntry& { return d.d1[r * (n + 1) + c]; };
  const KKEntry half_unit{Parity::HalfIntegral, IntPoly{1}};
  for (std::size_t i = 0; i < n; ++i) {
    const long ki = static_cast<long>(k[i]);
    at(i, i) = half_unit;                              // C -> A_i
    at(i, n) = KKEntry{Parity::Integral, IntPoly{-ki}};  // A -> A_i
    at(n, i) = KKEntry{Parity::Integral, IntPoly{-ki}};  // C_i -> C
  }
  at(n, n) = half_unit;  // A -> C
  return d;
}

Parity module_parity(TestObject test, ObjectKind summand) {
  const bool same = (test == TestObject::Scalars) == (summand == ObjectKind::Scalars);
  return same ? Parity::Integral : Parity::HalfIntegral;
}

ModuleMatrix::ModuleMatrix(std::vector<Parity> row_parities, std::vector<Parity> col_parities)
    : row_parities_(std::move(row_parities)),
      col_parities_(std::move(col_parities)),
      entries_(row_parities_.size() * col_parities_.size()) {}

long ModuleMatrix::max_degree() const {
  long d = 0;
  for (const auto& e : entries_) d = std::max(d, e.degree());
  return d;
}

IntMatrix ModuleMatrix::truncate(unsigned degree) const {
  const std::size_t in_block = degree + 1;
  const std::size_t out_block = degree + static_cast<std::size_t>(max_degree()) + 1;
  IntMatrix m(rows() * out_block, cols() * in_block);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) {
      const auto& coeffs = (*this)(r, c).coefficients();
      for (std::size_t p = 0; p < in_block; ++p) {
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
          if (sgn(coeffs[i]) != 0) m(r * out_block + p + i, c * in_block + p) = coeffs[i];
        }
      }
    }
  }
  return m;
}

IntMatrix EvaluationMap::truncate(unsigned degree) const {
  const std::size_t block = degree + 1;
  IntMatrix m(target_rank, slot_images.size() * block);
  for (std::size_t s = 0; s < slot_images.size(); ++s) {
    IntVector v = slot_images[s];
    for (std::size_t p = 0; p < block; ++p) {
      for (std::size_t i = 0; i < target_rank; ++i) m(i, s * block + p) = v[i];
      v = t_action.apply(v);
    }
  }
  return m;
}

ModuleMatrix induced_d1(const ResolutionDiagram& diagram, TestObject test) {
  std::vector<Parity> rows, cols;
  for (auto kind : diagram.target) rows.push_back(module_parity(test, kind));
  for (auto kind : diagram.source) cols.push_back(module_parity(test, kind));
  ModuleMatrix m(rows, cols);
  const IntPoly t = IntPoly::monomial(1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const KKEntry& e = diagram.entry(r, c);
      if (e.poly.is_zero()) continue;
      if (cols[c] + e.parity != rows[r]) {
        fail(ErrorKind::Inconsistent, "parity mismatch in induced d1 at (" + std::to_string(r) +
                                          ", " + std::to_string(c) + ")");
      }
      // Basis element of the source times the entry, written in the target basis:
      // t^{1/2} * t^{1/2} = t, every other combination leaves the polynomial unchanged.
      const bool both_half = cols[c] == Parity::HalfIntegral && e.parity == Parity::HalfIntegral;
      m(r, c) = both_half ? t * e.poly : e.poly;
    }
  }
  return m;
}

std::vector<IntVector> evaluation_slot_images(const DimVector& k, TestObject test) {
  const std::size_t n = k.n();
  std::vector<IntVector> images;
  if (test == TestObject::Scalars) {
    for (std::size_t j = 0; j < n; ++j) images.push_back({BigInt(static_cast<unsigned long>(k[j]))});
    images.push_back({BigInt(1)});
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      IntVector e(n);
      e[j] = 1;
      images.push_back(std::move(e));
    }
    IntVector kv(n);
    for (std::size_t j = 0; j < n; ++j) kv[j] = static_cast<unsigned long>(k[j]);
    images.push_back(std::move(kv));
  }
  return images;
}

IntMatrix derive_t_action(const ModuleMatrix& d1, const std::vector<IntVector>& slot_images,
                          std::size_t target_rank) {
  if (slot_images.size() != d1.rows()) {
    fail(ErrorKind::InvalidArgument, "one evaluation image per codomain slot is required");
  }
  if (d1.max_degree() > 1) {
    fail(ErrorKind::InvalidArgument, "t-action solver needs entries of degree at most 1");
  }
  const std::size_t m = target_rank;
  // Column c of d0 o d1 is sum_r (a_rc + b_rc T) s_r = z_c + T w_c; solve T w_c = -z_c.
  IntMatrix system(d1.cols() * m, m * m);
  IntVector rhs(d1.cols() * m);
  for (std::size_t c = 0; c < d1.cols(); ++c) {
    IntVector z(m), w(m);
    for (std::size_t r = 0; r < d1.rows(); ++r) {
      const BigInt a = d1(r, c).coefficient(0);
      const BigInt b = d1(r, c).coefficient(1);
      for (std::size_t i = 0; i < m; ++i) {
        z[i] += a * slot_images[r][i];
        w[i] += b * slot_images[r][i];
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) system(c * m + i, i * m + j) = w[j];
      rhs[c * m + i] = -z[i];
    }
  }
  const auto snf = smith_normal_form(system);
  auto sol = solve_integer(snf, rhs);
  if (!sol) fail(ErrorKind::Inconsistent, "no integral t-action makes d0 o d1 vanish");
  if (snf.rank != m * m) fail(ErrorKind::Inconsistent, "t-action is not determined by d0 o d1 = 0");
  return IntMatrix(m, m, std::move(*sol));
}

IntMatrix derive_t_action(const DimVector& k, TestObject test) {
  const auto d1 = induced_d1(resolution_diagram(k), test);
  const std::size_t m = test == TestObject::Scalars ? 1 : k.n();
  return derive_t_action(d1, evaluation_slot_images(k, test), m);
}

InducedComplex build_complex(const DimVector& k, TestObject test) {
  ModuleMatrix d1 = induced_d1(resolution_diagram(k), test);
  EvaluationMap d0;
  d0.target_rank = test == TestObject::Scalars ? 1 : k.n();
  d0.slot_images = evaluation_slot_images(k, test);
  d0.t_action = derive_t_action(d1, d0.slot_images, d0.target_rank);
  return InducedComplex{test, std::move(d1), std::move(d0)};
}

ExactnessReport check_exactness(const DimVector& k, TestObject test, unsigned degree_bound) {
  if (degree_bound < 2) {
    fail(ErrorKind::InvalidArgument, "degree bound must be at least 2 to certify anything");
  }
  const InducedComplex cx = build_complex(k, test);
  ExactnessReport rep;
  rep.test = test;
  rep.degree_bound = degree_bound;
  rep.certified_degree = degree_bound - 1;
  rep.t_action = cx.d0.t_action;
  if (k.below_theorem_scope()) rep.warnings.push_back(k.scope_warning());

  const unsigned lift = static_cast<unsigned>(cx.d1.max_degree());
  const IntMatrix d1 = cx.d1.truncate(degree_bound);
  rep.composition_zero = (cx.d0.truncate(degree_bound + lift) * d1).is_zero();

  const auto d1_snf = smith_normal_form(d1);
  rep.d1_injective = d1_snf.rank == d1.cols();

  const IntMatrix d0 = cx.d0.truncate(rep.certified_degree);
  const auto d0_snf = smith_normal_form(d0);
  rep.d0_surjective = d0_snf.rank == cx.d0.target_rank;
  for (std::size_t i = 0; i < d0_snf.rank; ++i) {
    if (d0_snf.invariant_factors[i] != 1) rep.d0_surjective = false;
  }

  // Kernel vectors live in slots x (certified_degree + 1) coordinates; the codomain of the
  // truncated d1 has slots x (degree_bound + lift + 1).
  const std::size_t in_block = rep.certified_degree + 1;
  const std::size_t out_block = degree_bound + lift + 1;
  const std::size_t slots = cx.d1.rows();
  const auto kernel = kernel_lattice(d0_snf);
  rep.kernel_rank = kernel.size();
  for (const auto& v : kernel) {
    IntVector lifted(slots * out_block);
    for (std::size_t s = 0; s < slots; ++s)
      for (std::size_t p = 0; p < in_block; ++p) lifted[s * out_block + p] = v[s * in_block + p];
    if (!solve_integer(d1_snf, lifted)) ++rep.unreached;
  }
  rep.kernel_in_image = rep.unreached == 0;
  return rep;
}

}  // namespace qautk

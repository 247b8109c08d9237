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

#include "torsion.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <utility>

#include "error.hpp"
#include "field_linalg.hpp"

namespace qautk {

namespace {

std::string format_vector(const StructureAlgebra& a, const CycloVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + v[i].to_string() + ")*" + a.label(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

StructureAlgebra::StructureAlgebra(FieldPtr field, std::vector<std::string> labels,
                                   std::vector<CycloVector> products,
                                   std::optional<std::vector<CycloVector>> star)
    : field_(std::move(field)),
      labels_(std::move(labels)),
      products_(std::move(products)),
      star_(std::move(star)) {
  const std::size_t d = dimension();
  if (d == 0) fail(ErrorKind::InvalidArgument, "algebra must have a nonempty basis");
  if (products_.size() != d * d) fail(ErrorKind::InvalidArgument, "structure constants must be d x d");
  auto check_vec = [&](const CycloVector& v, const char* what) {
    if (v.size() != d) fail(ErrorKind::InvalidArgument, std::string(what) + " vector has wrong length");
    for (const auto& c : v)
      if (c.field()->order() != field_->order())
        fail(ErrorKind::InvalidArgument, std::string(what) + " coefficient from a different field");
  };
  for (const auto& p : products_) check_vec(p, "product");
  if (star_) {
    if (star_->size() != d) fail(ErrorKind::InvalidArgument, "involution needs one image per basis element");
    for (const auto& s : *star_) check_vec(s, "involution");
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const CycloVector left = multiply(product(i, j), basis_vector(k));
        const CycloVector right = multiply(basis_vector(i), product(j, k));
        if (left != right) {
          fail(ErrorKind::InvalidArgument, "structure constants are not associative at (" + labels_[i] +
                                               ", " + labels_[j] + ", " + labels_[k] + ")");
        }
      }
  if (star_) {
    for (std::size_t i = 0; i < d; ++i) {
      if (apply_star(this->star(i)) != basis_vector(i)) {
        fail(ErrorKind::InvalidArgument, "involution is not involutive on " + labels_[i]);
      }
      for (std::size_t j = 0; j < d; ++j) {
        if (apply_star(product(i, j)) != multiply(this->star(j), this->star(i))) {
          fail(ErrorKind::InvalidArgument, "involution is not anti-multiplicative on (" + labels_[i] +
                                               ", " + labels_[j] + ")");
        }
      }
    }
  }
}

const CycloVector& StructureAlgebra::star(std::size_t i) const {
  if (!star_) fail(ErrorKind::InvalidArgument, "algebra has no involution");
  return (*star_)[i];
}

CycloVector StructureAlgebra::zero() const { return CycloVector(dimension(), Cyclotomic(field_)); }

CycloVector StructureAlgebra::basis_vector(std::size_t i) const {
  CycloVector v = zero();
  v[i] = Cyclotomic(field_, Rational(1));
  return v;
}

CycloVector StructureAlgebra::multiply(const CycloVector& x, const CycloVector& y) const {
  const std::size_t d = dimension();
  CycloVector out = zero();
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const Cyclotomic c = x[i] * y[j];
      const CycloVector& p = product(i, j);
      for (std::size_t k = 0; k < d; ++k)
        if (!p[k].is_zero()) out[k] = out[k] + c * p[k];
    }
  }
  return out;
}

CycloVector StructureAlgebra::apply_star(const CycloVector& x) const {
  const std::size_t d = dimension();
  CycloVector out = zero();
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    const Cyclotomic c = x[i].conj();
    const CycloVector& s = star(i);
    for (std::size_t k = 0; k < d; ++k)
      if (!s[k].is_zero()) out[k] = out[k] + c * s[k];
  }
  return out;
}

StructureAlgebra algebra_from_matrices(FieldPtr field, std::vector<std::string> labels,
                                       const std::vector<CycloMatrix>& matrices) {
  const std::size_t d = matrices.size();
  if (d == 0 || labels.size() != d) fail(ErrorKind::InvalidArgument, "one label per basis matrix is required");
  const std::size_t n = matrices.front().size();
  const Cyclotomic zero(field);
  auto flatten = [&](const CycloMatrix& m) {
    CycloVector v;
    for (const auto& row : m) {
      if (row.size() != n) fail(ErrorKind::InvalidArgument, "basis matrices must be square of equal size");
      v.insert(v.end(), row.begin(), row.end());
    }
    if (v.size() != n * n) fail(ErrorKind::InvalidArgument, "basis matrices must be square of equal size");
    return v;
  };
  // Columns of `system` are the flattened basis matrices.
  FieldRows<Cyclotomic> system(n * n, CycloVector(d, zero));
  for (std::size_t k = 0; k < d; ++k) {
    const CycloVector v = flatten(matrices[k]);
    for (std::size_t r = 0; r < n * n; ++r) system[r][k] = v[r];
  }
  if (field_rank(system) != d) fail(ErrorKind::InvalidArgument, "basis matrices are linearly dependent");
  auto coords = [&](const CycloMatrix& m, const std::string& what) {
    auto x = solve_linear(system, flatten(m), d, zero);
    if (!x) fail(ErrorKind::InvalidArgument, "span of the basis matrices is not closed under " + what);
    return *x;
  };
  auto matmul = [&](const CycloMatrix& a, const CycloMatrix& b) {
    CycloMatrix c(n, CycloVector(n, zero));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) c[i][j] = c[i][j] + a[i][l] * b[l][j];
      }
    return c;
  };
  std::vector<CycloVector> products;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) products.push_back(coords(matmul(matrices[i], matrices[j]), "products"));
  std::vector<CycloVector> star;
  for (std::size_t i = 0; i < d; ++i) {
    CycloMatrix adj(n, CycloVector(n, zero));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) adj[r][c] = matrices[i][c][r].conj();
    star.push_back(coords(adj, "adjoints"));
  }
  return StructureAlgebra(std::move(field), std::move(labels), std::move(products), std::move(star));
}

GradedAlgebra::GradedAlgebra(StructureAlgebra algebra, FiniteGroup group, std::vector<std::size_t> grading)
    : algebra_(std::move(algebra)), group_(std::move(group)), grading_(std::move(grading)) {
  const std::size_t d = algebra_.dimension();
  if (grading_.size() != d) fail(ErrorKind::InvalidArgument, "grading needs one group element per basis element");
  for (auto g : grading_)
    if (g >= group_.order()) fail(ErrorKind::InvalidArgument, "grading refers to an element outside the group");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t g = group_.mul(grading_[i], grading_[j]);
      const auto& p = algebra_.product(i, j);
      for (std::size_t k = 0; k < d; ++k)
        if (!p[k].is_zero() && grading_[k] != g) {
          fail(ErrorKind::InvalidArgument, "product " + algebra_.label(i) + "*" + algebra_.label(j) +
                                               " leaves its graded component");
        }
    }
  if (algebra_.has_star()) {
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t g = group_.inv(grading_[i]);
      const auto& s = algebra_.star(i);
      for (std::size_t k = 0; k < d; ++k)
        if (!s[k].is_zero() && grading_[k] != g) {
          fail(ErrorKind::InvalidArgument, "involution does not map the component of " + algebra_.label(i) +
                                               " to the inverse component");
        }
    }
  }
}

std::size_t GradedAlgebra::component_dimension(std::size_t g) const {
  return static_cast<std::size_t>(std::count(grading_.begin(), grading_.end(), g));
}

bool is_ergodic(const GradedAlgebra& b) { return b.component_dimension(b.group().identity()) == 1; }

TorsionData extract_torsion_data(const GradedAlgebra& b) {
  const StructureAlgebra& alg = b.algebra();
  const FiniteGroup& g = b.group();
  const FieldPtr& field = alg.field();
  if (!is_ergodic(b)) {
    fail(ErrorKind::Domain, "not ergodic: identity component has dimension " +
                                std::to_string(b.component_dimension(g.identity())));
  }
  if (!alg.has_star()) fail(ErrorKind::InvalidArgument, "torsion extraction needs the involution");

  // Support and the basis element spanning each component.
  std::map<std::size_t, std::size_t> basis_of;
  for (std::size_t i = 0; i < alg.dimension(); ++i) {
    const std::size_t s = b.grading()[i];
    if (basis_of.count(s)) {
      fail(ErrorKind::Domain, "component of group element " + std::to_string(s) + " is not one-dimensional");
    }
    basis_of[s] = i;
  }
  const std::size_t e = g.identity();
  for (const auto& [s, i] : basis_of) {
    if (!basis_of.count(g.inv(s))) {
      fail(ErrorKind::Domain, "support is not closed under inverses at element " + std::to_string(s));
    }
    for (const auto& [t, j] : basis_of)
      if (!basis_of.count(g.mul(s, t))) {
        fail(ErrorKind::Domain, "support is not closed under products at (" + std::to_string(s) + ", " +
                                    std::to_string(t) + ")");
      }
  }

  // x_s = b_s, except x_e = b_e / c with b_e^2 = c b_e, so that x_e = 1.
  const std::size_t be = basis_of.at(e);
  const Cyclotomic ce = alg.product(be, be)[be];
  if (ce.is_zero()) fail(ErrorKind::Domain, "identity component does not contain the unit");
  auto scale = [&](std::size_t s) {
    return s == e ? inverse(ce) : Cyclotomic(field, Rational(1));
  };
  // x_s x_t = lambda(s, t) x_{st}
  auto lambda = [&](std::size_t s, std::size_t t) {
    const std::size_t st = g.mul(s, t);
    const Cyclotomic c = alg.product(basis_of.at(s), basis_of.at(t))[basis_of.at(st)];
    return c * scale(s) * scale(t) * inverse(scale(st));
  };

  for (const auto& [s, i] : basis_of) {
    if (lambda(s, g.inv(s)).is_zero() || lambda(g.inv(s), s).is_zero()) {
      fail(ErrorKind::Domain, "component of " + alg.label(i) + " has no invertible element: " + alg.label(i) +
                                  " * " + alg.label(basis_of.at(g.inv(s))) + " = 0");
    }
  }

  // c_s = x_s^* x_s (a positive scalar).
  std::map<std::size_t, Cyclotomic> norm;
  for (const auto& [s, i] : basis_of) {
    const std::size_t si = g.inv(s);
    const Cyclotomic mu = alg.star(i)[basis_of.at(si)] * scale(s).conj() * inverse(scale(si));
    const Cyclotomic c = mu * lambda(si, s);
    if (!c.is_real() || c.to_complex().real() <= 0) {
      fail(ErrorKind::Domain, "x* x is not a positive scalar for " + alg.label(i));
    }
    norm.emplace(s, c);
  }

  std::vector<std::size_t> support;
  for (const auto& [s, i] : basis_of) support.push_back(s);
  std::map<std::size_t, std::size_t> local;
  for (std::size_t a = 0; a < support.size(); ++a) local[support[a]] = a;

  const std::size_t h = support.size();
  std::vector<std::vector<std::size_t>> table(h, std::vector<std::size_t>(h));
  std::vector<std::vector<unsigned>> exps(h, std::vector<unsigned>(h));
  const std::size_t n_roots = field->order();
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t c = 0; c < h; ++c) {
      const std::size_t s = support[a], t = support[c], st = g.mul(s, t);
      table[a][c] = local.at(st);
      const Cyclotomic lam = lambda(s, t);
      // w(s,t) = lambda * sqrt(c_st / (c_s c_t)) has modulus one: |lambda|^2 c_st = c_s c_t,
      // and w is the root of unity with lambda * w^-1 real and positive.
      if (lam * lam.conj() * norm.at(st) != norm.at(s) * norm.at(t)) {
        fail(ErrorKind::Domain, "normalized structure constant at (" + std::to_string(s) + ", " +
                                    std::to_string(t) + ") does not have modulus one");
      }
      std::optional<unsigned> found;
      for (unsigned r = 0; r < n_roots && !found; ++r) {
        const Cyclotomic rest = lam * Cyclotomic::root(field, -static_cast<long>(r));
        if (rest.is_real() && rest.to_complex().real() > 0) found = r;
      }
      if (!found) {
        fail(ErrorKind::Domain, "structure constant at (" + std::to_string(s) + ", " + std::to_string(t) +
                                    ") is not a root of unity of order " + std::to_string(n_roots));
      }
      exps[a][c] = *found;
    }
  FiniteGroup sub(std::move(table), local.at(e));
  Cocycle w(sub, static_cast<unsigned>(n_roots), std::move(exps));
  return TorsionData{std::move(sub), std::move(support), std::move(w)};
}

GradedAlgebra twisted_group_algebra(const Cocycle& w) {
  const FiniteGroup& g = w.group();
  const std::size_t n = g.order();
  FieldPtr field = cyclotomic_field(w.root_order());
  const Cyclotomic zero(field);
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < n; ++s) labels.push_back("d" + std::to_string(s));
  std::vector<CycloVector> products;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      CycloVector v(n, zero);
      v[g.mul(s, t)] = Cyclotomic::root(field, w.exponent(s, t));
      products.push_back(std::move(v));
    }
  std::vector<CycloVector> star;
  for (std::size_t s = 0; s < n; ++s) {
    CycloVector v(n, zero);
    v[g.inv(s)] = Cyclotomic::root(field, -static_cast<long>(w.exponent(s, g.inv(s))));
    star.push_back(std::move(v));
  }
  std::vector<std::size_t> grading(n);
  for (std::size_t s = 0; s < n; ++s) grading[s] = s;
  return GradedAlgebra(StructureAlgebra(field, std::move(labels), std::move(products), std::move(star)), g,
                       std::move(grading));
}

BlockDecomposition block_decomposition(const StructureAlgebra& b) {
  const std::size_t d = b.dimension();
  const Cyclotomic zero(b.field());

  // Trace form Tr(L_i L_j) = sum_{a,c} [b_i b_c]_a [b_j b_a]_c.
  FieldRows<Cyclotomic> trace_form(d, CycloVector(d, zero));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Cyclotomic acc = zero;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t c = 0; c < d; ++c) {
          const auto& x = b.product(i, c)[a];
          if (x.is_zero()) continue;
          const auto& y = b.product(j, a)[c];
          if (!y.is_zero()) acc = acc + x * y;
        }
      trace_form[i][j] = acc;
      trace_form[j][i] = acc;
    }
  const auto radical = nullspace(trace_form, d, zero);
  if (!radical.empty()) {
    fail(ErrorKind::Domain, "not semisimple: the trace form is degenerate; radical element " +
                                format_vector(b, radical.front()));
  }

  // Center: sum_i z_i (b_i b_j - b_j b_i) = 0 for all j.
  FieldRows<Cyclotomic> commutator;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      CycloVector row(d, zero);
      for (std::size_t i = 0; i < d; ++i) row[i] = b.product(i, j)[k] - b.product(j, i)[k];
      commutator.push_back(std::move(row));
    }
  const auto center = nullspace(commutator, d, zero);
  const std::size_t r = center.size();

  // Left multiplication by each basis element, in floating point.
  std::vector<Eigen::MatrixXcd> left(d, Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d),
                                                               static_cast<Eigen::Index>(d)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const auto& c = b.product(i, j)[k];
        if (!c.is_zero()) left[i](static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = c.to_complex();
      }

  std::mt19937_64 rng(0x5eedu);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Eigen::MatrixXcd lz = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (const auto& z : center) {
      const std::complex<double> w(coef(rng), coef(rng));
      for (std::size_t i = 0; i < d; ++i)
        if (!z[i].is_zero()) lz += w * z[i].to_complex() * left[i];
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(lz, false);
    if (solver.info() != Eigen::Success) continue;
    std::vector<std::complex<double>> eig(solver.eigenvalues().data(), solver.eigenvalues().data() + d);
    double scale = 1.0;
    for (const auto& v : eig) scale = std::max(scale, std::abs(v));
    const double tol = kEigenvalueClusterTolerance * scale;

    std::vector<std::complex<double>> centers;
    std::vector<std::size_t> counts;
    bool ambiguous = false;
    for (const auto& v : eig) {
      std::size_t hits = 0, where = 0;
      for (std::size_t c = 0; c < centers.size(); ++c)
        if (std::abs(centers[c] - v) <= tol) {
          ++hits;
          where = c;
        }
      if (hits > 1) ambiguous = true;
      if (hits == 0) {
        centers.push_back(v);
        counts.push_back(1);
      } else {
        ++counts[where];
      }
    }
    if (ambiguous || centers.size() != r) continue;
    BlockDecomposition out;
    out.center_dimension = r;
    bool squares = true;
    for (auto c : counts) {
      const auto m = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(c))));
      if (m * m != c) squares = false;
      out.block_sizes.push_back(m);
    }
    if (!squares) continue;
    std::sort(out.block_sizes.begin(), out.block_sizes.end());
    return out;
  }
  fail(ErrorKind::Inconsistent, "eigenvalue clustering does not match the exact center dimension " +
                                    std::to_string(r));
}

}  // namespace qautk

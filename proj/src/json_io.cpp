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


#include "json_io.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "error.hpp"

namespace qautk {

namespace {

const Json& require(const Json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorKind::Parse, std::string(where) + ": missing key \"" + key + "\"");
  }
  return j.at(key);
}

std::size_t index_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    fail(ErrorKind::Parse, std::string(what) + " must be a non-negative integer, got " + j.dump());
  }
  return j.get<std::size_t>();
}

std::vector<std::vector<std::size_t>> index_table(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::Parse, std::string(what) + " must be an array of arrays");
  std::vector<std::vector<std::size_t>> t;
  for (const auto& row : j) {
    if (!row.is_array()) fail(ErrorKind::Parse, std::string(what) + " must be an array of arrays");
    std::vector<std::size_t> r;
    for (const auto& v : row) r.push_back(index_from_json(v, what));
    t.push_back(std::move(r));
  }
  return t;
}

CycloVector terms_from_json(const Json& j, const FieldPtr& field, std::size_t d, const char* what) {
  if (!j.is_array()) fail(ErrorKind::Parse, std::string(what) + " must be a list of {basis, coeff} terms");
  CycloVector v(d, Cyclotomic(field));
  for (const auto& term : j) {
    const std::size_t k = index_from_json(require(term, "basis", what), "basis index");
    if (k >= d) fail(ErrorKind::Parse, std::string(what) + ": basis index " + std::to_string(k) + " out of range");
    v[k] = v[k] + cyclotomic_from_json(require(term, "coeff", what), field);
  }
  return v;
}

Json terms_to_json(const CycloVector& v) {
  Json out = Json::array();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.push_back({{"basis", k}, {"coeff", cyclotomic_to_json(v[k])}});
  return out;
}

CMatrix complex_matrix_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "density block must be an array of rows");
  CMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) fail(ErrorKind::Parse, "density block must be an array of rows");
    std::vector<ComplexRational> r;
    for (const auto& v : row) r.push_back(complex_from_json(v));
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

Json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(static_cast<long long>(v.get_si()));
  return Json(v.get_str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) fail(ErrorKind::Parse, "not an integer: " + j.dump());
    return v;
  }
  fail(ErrorKind::Parse, "expected an integer, got " + j.dump());
}

Json rational_to_json(const Rational& v) {
  Rational c = v;
  c.canonicalize();
  return Json(c.get_str());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(ErrorKind::Parse, "expected an exact rational (integer or \"p/q\" string), got " + j.dump());
}

Json complex_to_json(const ComplexRational& v) {
  if (v.is_real()) return rational_to_json(v.re);
  return {{"re", rational_to_json(v.re)}, {"im", rational_to_json(v.im)}};
}

ComplexRational complex_from_json(const Json& j) {
  if (j.is_object()) {
    const Rational re = j.contains("re") ? rational_from_json(j.at("re")) : Rational(0);
    const Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
    return {re, im};
  }
  return rational_from_json(j);
}

Json int_vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(bigint_to_json(x));
  return out;
}

Json int_matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(bigint_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix int_matrix_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.front().size();
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) fail(ErrorKind::Parse, "matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = bigint_from_json(j[r][c]);
  }
  return m;
}

Json fg_group_to_json(const FgAbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion()) torsion.push_back(bigint_to_json(t));
  return {{"free", g.free_rank()}, {"torsion", std::move(torsion)}};
}

Json group_to_json(const FiniteGroup& g) { return {{"table", g.table()}, {"identity", g.identity()}}; }

FiniteGroup group_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::Parse, "group must be a JSON object");
  if (j.contains("table")) {
    const std::size_t e = j.contains("identity") ? index_from_json(j.at("identity"), "identity") : 0;
    return FiniteGroup(index_table(j.at("table"), "Cayley table"), e);
  }
  if (j.contains("cyclic")) {
    const std::size_t n = index_from_json(j.at("cyclic"), "cyclic order");
    if (n == 0) fail(ErrorKind::InvalidArgument, "cyclic order must be positive");
    return FiniteGroup::cyclic(n);
  }
  if (j.contains("dihedral")) {
    const std::size_t m = index_from_json(j.at("dihedral"), "dihedral parameter");
    if (m == 0) fail(ErrorKind::InvalidArgument, "dihedral parameter must be positive");
    return FiniteGroup::dihedral(m);
  }
  if (j.contains("symmetric")) {
    const std::size_t n = index_from_json(j.at("symmetric"), "symmetric degree");
    if (n > 6) fail(ErrorKind::InvalidArgument, "symmetric degree above 6 is not supported");
    return FiniteGroup::symmetric(n);
  }
  if (j.contains("quaternion")) return FiniteGroup::quaternion();
  if (j.contains("product")) {
    const Json& parts = j.at("product");
    if (!parts.is_array() || parts.empty()) fail(ErrorKind::Parse, "product must be a nonempty list of groups");
    FiniteGroup g = group_from_json(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) g = FiniteGroup::direct_product(g, group_from_json(parts[i]));
    return g;
  }
  fail(ErrorKind::Parse, "group needs one of: table, cyclic, dihedral, symmetric, quaternion, product");
}

Json cocycle_to_json(const Cocycle& w) { return {{"root_order", w.root_order()}, {"exponents", w.exponents()}}; }

Cocycle cocycle_from_json(const Json& j, const FiniteGroup& g) {
  if (j.is_null()) return Cocycle::trivial(g);
  const std::size_t m = index_from_json(require(j, "root_order", "cocycle"), "root_order");
  if (m == 0 || m > std::numeric_limits<unsigned>::max()) fail(ErrorKind::InvalidArgument, "root_order out of range");
  std::vector<std::vector<unsigned>> e;
  for (const auto& row : index_table(require(j, "exponents", "cocycle"), "cocycle exponents")) {
    std::vector<unsigned> r;
    // Out-of-range values are clamped to m so the cocycle constructor reports them.
    for (auto v : row) r.push_back(static_cast<unsigned>(std::min<std::size_t>(v, m)));
    e.push_back(std::move(r));
  }
  return Cocycle(g, static_cast<unsigned>(m), std::move(e));
}

Json cyclotomic_to_json(const Cyclotomic& v) {
  if (auto q = v.as_rational()) return rational_to_json(*q);
  if (auto a = v.root_exponent()) return {{"zeta", *a}};
  Json out = Json::array();
  const auto& c = v.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (sgn(c[k]) != 0) out.push_back({{"zeta", k}, {"scale", rational_to_json(c[k])}});
  return out;
}

Cyclotomic cyclotomic_from_json(const Json& j, const FieldPtr& field) {
  if (j.is_array()) {
    Cyclotomic sum(field);
    for (const auto& t : j) sum = sum + cyclotomic_from_json(t, field);
    return sum;
  }
  if (j.is_object()) {
    if (j.contains("re") || j.contains("im")) {
      // a + b i needs i = zeta^{N/4}.
      const ComplexRational z = complex_from_json(j);
      Cyclotomic out(field, z.re);
      if (sgn(z.im) != 0) {
        if (field->order() % 4 != 0) {
          fail(ErrorKind::InvalidArgument, "imaginary unit needs field_order divisible by 4");
        }
        out = out + Cyclotomic(field, z.im) * Cyclotomic::root(field, static_cast<long>(field->order() / 4));
      }
      return out;
    }
    const Json& a = require(j, "zeta", "cyclotomic term");
    if (!a.is_number_integer()) fail(ErrorKind::Parse, "zeta exponent must be an integer");
    const Rational scale = j.contains("scale") ? rational_from_json(j.at("scale")) : Rational(1);
    return Cyclotomic(field, scale) * Cyclotomic::root(field, a.get<long>());
  }
  return Cyclotomic(field, rational_from_json(j));
}

Json graded_algebra_to_json(const GradedAlgebra& b) {
  const StructureAlgebra& a = b.algebra();
  const std::size_t d = a.dimension();
  Json products = Json::array();
  for (std::size_t i = 0; i < d; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < d; ++j) row.push_back(terms_to_json(a.product(i, j)));
    products.push_back(std::move(row));
  }
  Json out = {{"group", group_to_json(b.group())},
              {"field_order", a.field()->order()},
              {"basis", a.labels()},
              {"grading", b.grading()},
              {"products", std::move(products)}};
  if (a.has_star()) {
    Json star = Json::array();
    for (std::size_t i = 0; i < d; ++i) star.push_back(terms_to_json(a.star(i)));
    out["star"] = std::move(star);
  }
  return out;
}

GradedAlgebra graded_algebra_from_json(const Json& j) {
  FiniteGroup g = group_from_json(require(j, "group", "graded algebra"));
  const std::size_t order = index_from_json(require(j, "field_order", "graded algebra"), "field_order");
  if (order == 0 || order > 10000) fail(ErrorKind::InvalidArgument, "field_order must be in [1, 10000]");
  const FieldPtr field = cyclotomic_field(static_cast<unsigned>(order));
  const Json& basis = require(j, "basis", "graded algebra");
  if (!basis.is_array()) fail(ErrorKind::Parse, "basis must be a list of labels");
  std::vector<std::string> labels;
  for (const auto& l : basis) labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
  const std::size_t d = labels.size();
  std::vector<std::size_t> grading;
  const Json& gj = require(j, "grading", "graded algebra");
  if (!gj.is_array()) fail(ErrorKind::Parse, "grading must be a list of group elements");
  for (const auto& v : gj) grading.push_back(index_from_json(v, "grading entry"));

  if (j.contains("matrices")) {
    std::vector<CycloMatrix> mats;
    for (const auto& mj : j.at("matrices")) {
      if (!mj.is_array()) fail(ErrorKind::Parse, "each basis matrix must be an array of rows");
      CycloMatrix m;
      for (const auto& row : mj) {
        if (!row.is_array()) fail(ErrorKind::Parse, "each basis matrix must be an array of rows");
        CycloVector r;
        for (const auto& v : row) r.push_back(cyclotomic_from_json(v, field));
        m.push_back(std::move(r));
      }
      mats.push_back(std::move(m));
    }
    return GradedAlgebra(algebra_from_matrices(field, std::move(labels), mats), std::move(g), std::move(grading));
  }

  const Json& pj = require(j, "products", "graded algebra");
  if (!pj.is_array() || pj.size() != d) fail(ErrorKind::Parse, "products must be a d x d array");
  std::vector<CycloVector> products;
  for (const auto& row : pj) {
    if (!row.is_array() || row.size() != d) fail(ErrorKind::Parse, "products must be a d x d array");
    for (const auto& cell : row) products.push_back(terms_from_json(cell, field, d, "product"));
  }
  std::optional<std::vector<CycloVector>> star;
  if (j.contains("star")) {
    const Json& sj = j.at("star");
    if (!sj.is_array() || sj.size() != d) fail(ErrorKind::Parse, "star must have one entry per basis element");
    star.emplace();
    for (const auto& cell : sj) star->push_back(terms_from_json(cell, field, d, "star"));
  }
  return GradedAlgebra(StructureAlgebra(field, std::move(labels), std::move(products), std::move(star)),
                       std::move(g), std::move(grading));
}

std::pair<FinDimAlgebra, AlgState> algebra_state_from_json(const Json& j) {
  const Json& bj = require(j, "block_sizes", "algebra");
  if (!bj.is_array()) fail(ErrorKind::Parse, "block_sizes must be a list of positive integers");
  std::vector<std::uint64_t> k;
  for (const auto& v : bj) k.push_back(index_from_json(v, "block size"));
  FinDimAlgebra a{DimVector(std::move(k))};
  if (j.contains("weights")) {
    std::vector<Rational> w;
    for (const auto& v : j.at("weights")) w.push_back(rational_from_json(v));
    AlgState s = AlgState::from_weights(a, w);
    return {std::move(a), std::move(s)};
  }
  const Json density = j.contains("density") ? j.at("density") : Json("trace");
  if (density.is_string()) {
    const auto name = density.get<std::string>();
    if (name == "trace") {
      AlgState s = AlgState::normalized_trace(a);
      return {std::move(a), std::move(s)};
    }
    if (name == "plancherel") {
      AlgState s = AlgState::plancherel_trace(a);
      return {std::move(a), std::move(s)};
    }
    fail(ErrorKind::Parse, "density must be \"trace\", \"plancherel\" or a list of blocks");
  }
  if (!density.is_array()) fail(ErrorKind::Parse, "density must be \"trace\", \"plancherel\" or a list of blocks");
  std::vector<CMatrix> blocks;
  for (const auto& b : density) blocks.push_back(complex_matrix_from_json(b));
  AlgState s = AlgState::from_density(a, std::move(blocks));
  return {std::move(a), std::move(s)};
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace qautk

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


#ifndef QAUTK_JSON_IO_HPP_
#define QAUTK_JSON_IO_HPP_

// JSON encodings. Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; rationals are strings "p/q"; complex values are {"re": .., "im": ..}.
//
// Group:      {"table": [[..]], "identity": e}  or one of {"cyclic": n}, {"dihedral": m},
//             {"symmetric": n}, {"quaternion": true}, {"product": [group, group]}
// Cocycle:    {"root_order": m, "exponents": [[..]]}
// Algebra:    {"block_sizes": [..], "density": "trace" | "plancherel" | [block matrices]}
//             or {"block_sizes": [1, .., 1], "weights": [..]}
// Cyclotomic: rational | {"zeta": a, "scale": rational} | [terms, ...] (summed)
// Graded:     {"group": .., "field_order": N, "basis": [labels], "grading": [..],
//              "products": [[[{"basis": k, "coeff": c}, ..], ..], ..], "star": [[terms], ..]}
//             or "matrices": [matrix, ..] in place of "products" and "star".

#include <utility>

#include "abelian_group.hpp"
#include "finite_group.hpp"
#include "findim_cstar.hpp"
#include "json.hpp"
#include "torsion.hpp"

namespace qautk {

using Json = nlohmann::json;

Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);
Json rational_to_json(const Rational& v);
Rational rational_from_json(const Json& j);
Json complex_to_json(const ComplexRational& v);
ComplexRational complex_from_json(const Json& j);

Json int_vector_to_json(const IntVector& v);
Json int_matrix_to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);
Json fg_group_to_json(const FgAbelianGroup& g);

Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);
Json cocycle_to_json(const Cocycle& w);
/// A missing or null document gives the trivial cocycle.
Cocycle cocycle_from_json(const Json& j, const FiniteGroup& g);

Json cyclotomic_to_json(const Cyclotomic& v);
Cyclotomic cyclotomic_from_json(const Json& j, const FieldPtr& field);
Json graded_algebra_to_json(const GradedAlgebra& b);
GradedAlgebra graded_algebra_from_json(const Json& j);

std::pair<FinDimAlgebra, AlgState> algebra_state_from_json(const Json& j);

/// Parses text, turning syntax errors into Error(Parse).
Json parse_json_text(std::string_view text);

}  // namespace qautk

#endif  // QAUTK_JSON_IO_HPP_

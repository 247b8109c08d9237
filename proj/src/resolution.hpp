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

#ifndef QAUTK_RESOLUTION_HPP_
#define QAUTK_RESOLUTION_HPP_

// The length-one resolution
//
//   0 -> C_1 = C^n + A  --d1-->  C_0 = A^n + C  --d0-->  C^red(G) -> 0
//
// and the two complexes of R(G)-modules obtained by applying KK^G(X, -) for the test
// objects X = C and X = A. After trivializing R^w(G) = t^{1/2} Z[t] on the basis t^{1/2},
// every induced d1 becomes a matrix over Z[t], and d0 becomes an evaluation map onto Z
// (resp. Z^n) carrying a t-action that is solved for, not assumed.

#include <string>
#include <vector>

#include "dim_vector.hpp"
#include "int_poly.hpp"
#include "repring.hpp"

namespace qautk {

enum class TestObject { Scalars, Algebra };
enum class ObjectKind { Scalars, Algebra };

const char* test_object_name(TestObject t);

/// A morphism between rank-one summands: t^{1/2} * poly(t) when half-integral, poly(t) otherwise.
struct KKEntry {
  Parity parity = Parity::Integral;
  IntPoly poly;
};

/// d1 : C_1 -> C_0 with entries in KK^G between the summands.
struct ResolutionDiagram {
  std::vector<ObjectKind> source;  // summands of C_1
  std::vector<ObjectKind> target;  // summands of C_0
  std::vector<KKEntry> d1;         // target.size() x source.size(), row-major

  const KKEntry& entry(std::size_t r, std::size_t c) const { return d1[r * source.size() + c]; }
};

ResolutionDiagram resolution_diagram(const DimVector& k);

/// Parity of KK^G(test, summand): R(G) when the kinds agree, R^w(G) otherwise.
Parity module_parity(TestObject test, ObjectKind summand);

/// Matrix of polynomials in t between free Z[t]-modules of rank one per slot.
class ModuleMatrix {
 public:
  ModuleMatrix(std::vector<Parity> row_parities, std::vector<Parity> col_parities);

  std::size_t rows() const noexcept { return row_parities_.size(); }
  std::size_t cols() const noexcept { return col_parities_.size(); }
  const std::vector<Parity>& row_parities() const noexcept { return row_parities_; }
  const std::vector<Parity>& col_parities() const noexcept { return col_parities_; }

  IntPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols() + c]; }
  const IntPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }

  long max_degree() const;

  /// Integer matrix of the map restricted to polynomials of degree <= `degree` in every slot.
  /// Coordinates are (slot, power) with index slot * (degree + 1) + power on the domain and
  /// slot * (degree + max_degree + 1) + power on the codomain.
  IntMatrix truncate(unsigned degree) const;

 private:
  std::vector<Parity> row_parities_;
  std::vector<Parity> col_parities_;
  std::vector<IntPoly> entries_;
};

/// R(G)-linear map from a free module onto Z^target_rank with t acting through t_action:
/// p(t) in slot j maps to p(T) * slot_images[j].
struct EvaluationMap {
  std::size_t target_rank = 0;
  std::vector<IntVector> slot_images;
  IntMatrix t_action;

  IntMatrix truncate(unsigned degree) const;
};

struct InducedComplex {
  TestObject test = TestObject::Scalars;
  ModuleMatrix d1;
  EvaluationMap d0;
};

/// d1 induced on KK^G(test, -), trivialized to a matrix over Z[t].
ModuleMatrix induced_d1(const ResolutionDiagram& diagram, TestObject test);

/// Images of the module generators under d0: the unit map C -> A_j composed with eps_j gives
/// k_j, the unit u gives 1; on the A side id_{A_j} gives e_j and the unit map gives k.
std::vector<IntVector> evaluation_slot_images(const DimVector& k, TestObject test);

/// Solves d0 o d1 = 0 for the t-action on the evaluation target. Requires entries of d1 of
/// degree <= 1. Throws Inconsistent if there is no solution or it is not unique.
IntMatrix derive_t_action(const ModuleMatrix& d1, const std::vector<IntVector>& slot_images,
                          std::size_t target_rank);
IntMatrix derive_t_action(const DimVector& k, TestObject test);

InducedComplex build_complex(const DimVector& k, TestObject test);

struct ExactnessReport {
  TestObject test = TestObject::Scalars;
  unsigned degree_bound = 0;
  unsigned certified_degree = 0;  // degree_bound - 1
  bool composition_zero = false;
  bool d1_injective = false;
  bool kernel_in_image = false;
  bool d0_surjective = false;
  std::size_t kernel_rank = 0;     // rank of ker d0 on degree <= certified_degree
  std::size_t unreached = 0;       // kernel basis vectors not hit by d1
  IntMatrix t_action;
  std::vector<std::string> warnings;

  bool exact() const { return composition_zero && d1_injective && kernel_in_image && d0_surjective; }
};

inline constexpr unsigned kDefaultDegreeBound = 12;

/// Certifies exactness of the truncated complex. Throws InvalidArgument if degree_bound < 2.
ExactnessReport check_exactness(const DimVector& k, TestObject test,
                                unsigned degree_bound = kDefaultDegreeBound);

}  // namespace qautk

#endif  // QAUTK_RESOLUTION_HPP_

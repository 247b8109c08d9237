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

#ifndef QAUTK_DIM_VECTOR_HPP_
#define QAUTK_DIM_VECTOR_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "int_matrix.hpp"

namespace qautk {

/// Block sizes (k_1, ..., k_n) of A = M_{k_1} + ... + M_{k_n}.
class DimVector {
 public:
  /// Throws InvalidArgument on an empty vector or a zero entry.
  explicit DimVector(std::vector<std::uint64_t> k);

  /// Parses "2,4" style input.
  static DimVector parse(std::string_view text);

  std::size_t n() const noexcept { return k_.size(); }
  const std::vector<std::uint64_t>& blocks() const noexcept { return k_; }
  std::uint64_t operator[](std::size_t i) const { return k_[i]; }

  /// sum of k_i^2.
  BigInt algebra_dimension() const;
  BigInt gcd() const;
  /// The K-theory formula is stated for dim A >= 4.
  bool below_theorem_scope() const { return algebra_dimension() < 4; }
  std::string scope_warning() const;

  std::string to_string() const;

  friend bool operator==(const DimVector&, const DimVector&) = default;

 private:
  std::vector<std::uint64_t> k_;
};

}  // namespace qautk

#endif  // QAUTK_DIM_VECTOR_HPP_

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

#include "dim_vector.hpp"

#include <charconv>
#include <utility>

#include "error.hpp"

namespace qautk {

DimVector::DimVector(std::vector<std::uint64_t> k) : k_(std::move(k)) {
  if (k_.empty()) fail(ErrorKind::InvalidArgument, "dimension vector must be nonempty");
  for (auto v : k_) {
    if (v == 0) fail(ErrorKind::InvalidArgument, "dimension vector entries must be positive");
  }
}

DimVector DimVector::parse(std::string_view text) {
  std::vector<std::uint64_t> k;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail(ErrorKind::InvalidArgument,
           "invalid dimension vector \"" + std::string(text) + "\": expected comma-separated positive integers");
    }
    k.push_back(v);
    pos = end + 1;
  }
  return DimVector(std::move(k));
}

BigInt DimVector::algebra_dimension() const {
  BigInt d = 0;
  for (auto v : k_) {
    BigInt b(static_cast<unsigned long>(v));
    d += b * b;
  }
  return d;
}

BigInt DimVector::gcd() const {
  BigInt g = 0;
  for (auto v : k_) {
    BigInt b(static_cast<unsigned long>(v));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b.get_mpz_t());
  }
  return g;
}

std::string DimVector::scope_warning() const {
  return "theorem scope: dim A = " + algebra_dimension().get_str() +
         " < 4; the closed-form K-theory is only asserted for dim A >= 4";
}

std::string DimVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < k_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(k_[i]);
  }
  return out;
}

}  // namespace qautk

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

#include "abelian_group.hpp"

#include <utility>

namespace qautk {

namespace {

// Pairwise gcd/lcm exchange. After the sweep over all i < j the list is a divisibility chain
// representing the same group, since Z_a + Z_b = Z_gcd + Z_lcm.
std::vector<BigInt> merge_chain(std::vector<BigInt> orders) {
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      BigInt g, l;
      mpz_gcd(g.get_mpz_t(), orders[i].get_mpz_t(), orders[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), orders[i].get_mpz_t(), orders[j].get_mpz_t());
      orders[i] = std::move(g);
      orders[j] = std::move(l);
    }
  }
  std::vector<BigInt> out;
  for (auto& o : orders)
    if (o > 1) out.push_back(std::move(o));
  return out;
}

}  // namespace

FgAbelianGroup::FgAbelianGroup(std::size_t free_rank, std::vector<BigInt> cyclic_orders)
    : free_rank_(free_rank) {
  std::vector<BigInt> finite;
  for (auto& o : cyclic_orders) {
    BigInt a = abs(o);
    if (a == 0) {
      ++free_rank_;
    } else if (a > 1) {
      finite.push_back(std::move(a));
    }
  }
  torsion_ = merge_chain(std::move(finite));
}

std::string FgAbelianGroup::to_string() const {
  std::string out;
  auto append = [&out](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  if (free_rank_ == 1) {
    append("Z");
  } else if (free_rank_ > 1) {
    append("Z^" + std::to_string(free_rank_));
  }
  for (std::size_t i = 0; i < torsion_.size();) {
    std::size_t j = i;
    while (j < torsion_.size() && torsion_[j] == torsion_[i]) ++j;
    std::string part = "Z_" + torsion_[i].get_str();
    if (j - i > 1) part += "^" + std::to_string(j - i);
    append(part);
    i = j;
  }
  return out.empty() ? "0" : out;
}

bool fg_group_isomorphic(const FgAbelianGroup& g, const FgAbelianGroup& h) { return g == h; }

FgAbelianGroup fg_direct_sum(const FgAbelianGroup& g, const FgAbelianGroup& h) {
  std::vector<BigInt> orders = g.torsion();
  orders.insert(orders.end(), h.torsion().begin(), h.torsion().end());
  return FgAbelianGroup(g.free_rank() + h.free_rank(), std::move(orders));
}

}  // namespace qautk

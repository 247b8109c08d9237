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

#include "finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "error.hpp"

namespace qautk {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table, std::size_t identity)
    : order_(table.size()), identity_(identity) {
  const std::size_t n = order_;
  if (n == 0) fail(ErrorKind::InvalidArgument, "group table is empty");
  if (identity >= n) fail(ErrorKind::InvalidArgument, "identity index out of range");
  table_.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) fail(ErrorKind::InvalidArgument, "group table must be square");
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) fail(ErrorKind::InvalidArgument, "group table entry out of range");
      table_.push_back(table[a][b]);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (mul(identity_, a) != a || mul(a, identity_) != a) {
      fail(ErrorKind::InvalidArgument, "element " + std::to_string(identity_) + " is not an identity");
    }
  }
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[a] = b;
    }
    if (inverse_[a] == n) fail(ErrorKind::InvalidArgument, "element " + std::to_string(a) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          fail(ErrorKind::InvalidArgument, "group table is not associative at (" + std::to_string(a) +
                                               ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
        }
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t), 0);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.order() * b.order();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  // (x, y) -> x * |b| + y
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t x = a.mul(p / b.order(), q / b.order());
      const std::size_t y = b.mul(p % b.order(), q % b.order());
      t[p][q] = x * b.order() + y;
    }
  return FiniteGroup(std::move(t), a.identity() * b.order() + b.identity());
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  std::vector<std::vector<std::size_t>> t(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = index.at(c);
    }
  return FiniteGroup(std::move(t), 0);
}

FiniteGroup FiniteGroup::dihedral(std::size_t m) {
  // r^a s^b -> a + m b, with s r s = r^{-1}.
  const std::size_t n = 2 * m;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t a = p % m, b = p / m, c = q % m, d = q / m;
      const std::size_t rot = b == 0 ? (a + c) % m : (a + m - c) % m;
      t[p][q] = rot + m * ((b + d) % 2);
    }
  return FiniteGroup(std::move(t), 0);
}

FiniteGroup FiniteGroup::quaternion() {
  // unit u in {1, i, j, k} and sign bit: index u + 4 * sign.
  // u_a u_b = sign * unit, from i j = k, j k = i, k i = j, i^2 = j^2 = k^2 = -1.
  static constexpr std::size_t kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr std::size_t kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t p = 0; p < 8; ++p)
    for (std::size_t q = 0; q < 8; ++q) {
      const std::size_t a = p % 4, b = q % 4;
      const std::size_t sign = (p / 4 + q / 4 + kSign[a][b]) % 2;
      t[p][q] = kUnit[a][b] + 4 * sign;
    }
  return FiniteGroup(std::move(t), 0);
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (!commute(a, b)) return false;
  return true;
}

std::vector<std::vector<std::size_t>> FiniteGroup::table() const {
  std::vector<std::vector<std::size_t>> t(order_, std::vector<std::size_t>(order_));
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) t[a][b] = mul(a, b);
  return t;
}

std::vector<std::vector<std::size_t>> FiniteGroup::conjugacy_classes() const {
  std::vector<bool> seen(order_, false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t a = 0; a < order_; ++a) {
    if (seen[a]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t g = 0; g < order_; ++g) {
      const std::size_t c = mul(mul(g, a), inv(g));
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Cocycle::Cocycle(FiniteGroup group, unsigned root_order, std::vector<std::vector<unsigned>> exponents)
    : group_(std::move(group)), root_order_(root_order) {
  const std::size_t n = group_.order();
  if (root_order_ == 0) fail(ErrorKind::InvalidArgument, "cocycle root order must be positive");
  if (exponents.size() != n) fail(ErrorKind::InvalidArgument, "cocycle table must be |G| x |G|");
  exps_.reserve(n * n);
  for (const auto& row : exponents) {
    if (row.size() != n) fail(ErrorKind::InvalidArgument, "cocycle table must be |G| x |G|");
    for (unsigned v : row) {
      if (v >= root_order_) fail(ErrorKind::InvalidArgument, "cocycle exponent out of range [0, root_order)");
      exps_.push_back(v);
    }
  }
  const std::size_t e = group_.identity();
  for (std::size_t s = 0; s < n; ++s) {
    if (exponent(e, s) != 0 || exponent(s, e) != 0) {
      fail(ErrorKind::InvalidArgument, "cocycle is not normalised at element " + std::to_string(s));
    }
  }
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t u = 0; u < n; ++u) {
        const unsigned lhs = (exponent(s, t) + exponent(group_.mul(s, t), u)) % root_order_;
        const unsigned rhs = (exponent(t, u) + exponent(s, group_.mul(t, u))) % root_order_;
        if (lhs != rhs) {
          fail(ErrorKind::InvalidArgument, "cocycle identity fails at (" + std::to_string(s) + ", " +
                                               std::to_string(t) + ", " + std::to_string(u) + ")");
        }
      }
}

Cocycle Cocycle::trivial(const FiniteGroup& group, unsigned root_order) {
  const std::size_t n = group.order();
  return Cocycle(group, root_order, std::vector<std::vector<unsigned>>(n, std::vector<unsigned>(n, 0)));
}

Cocycle Cocycle::coboundary(const FiniteGroup& group, unsigned root_order, std::span<const unsigned> beta) {
  const std::size_t n = group.order();
  if (beta.size() != n) fail(ErrorKind::InvalidArgument, "coboundary needs one value per element");
  std::vector<std::vector<unsigned>> e(n, std::vector<unsigned>(n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const unsigned v = (beta[s] + beta[t] + root_order - beta[group.mul(s, t)] % root_order) % root_order;
      e[s][t] = v;
    }
  return Cocycle(group, root_order, std::move(e));
}

std::vector<std::vector<unsigned>> Cocycle::exponents() const {
  const std::size_t n = group_.order();
  std::vector<std::vector<unsigned>> out(n, std::vector<unsigned>(n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) out[s][t] = exponent(s, t);
  return out;
}

Cocycle Cocycle::lifted(unsigned m) const {
  if (m % root_order_ != 0) fail(ErrorKind::InvalidArgument, "lifted root order must be a multiple");
  auto e = exponents();
  for (auto& row : e)
    for (auto& v : row) v *= m / root_order_;
  return Cocycle(group_, m, std::move(e));
}

Cocycle Cocycle::operator*(const Cocycle& other) const {
  if (other.group_.table() != group_.table()) fail(ErrorKind::InvalidArgument, "cocycles on different groups");
  const unsigned m = std::lcm(root_order_, other.root_order_);
  const Cocycle a = lifted(m);
  const Cocycle b = other.lifted(m);
  const std::size_t n = group_.order();
  std::vector<std::vector<unsigned>> e(n, std::vector<unsigned>(n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) e[s][t] = (a.exponent(s, t) + b.exponent(s, t)) % m;
  return Cocycle(group_, m, std::move(e));
}

bool Cocycle::is_regular(std::size_t s) const {
  for (std::size_t t = 0; t < group_.order(); ++t) {
    if (group_.commute(s, t) && exponent(s, t) != exponent(t, s)) return false;
  }
  return true;
}

std::size_t Cocycle::regular_class_count() const {
  std::size_t count = 0;
  for (const auto& cls : group_.conjugacy_classes())
    if (is_regular(cls.front())) ++count;
  return count;
}

}  // namespace qautk

// Copyright 2026 The wpl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The Grothendieck group K0(X) in coordinates.
//
// Classes are integer vectors over the basis B = {[O(x)] : 0 <= x <= c},
// indexed as
//   0                         -> [O(0)]
//   1 .. p1-1                 -> [O(l x1)],  l = 1 .. p1-1
//   then the same for x2, x3
//   2 + sum (p_i - 1) - 1     -> [O(c)]
//
// A line bundle reduces through the tube relations
//   [O(y)] = sum_i [O(l_i x_i)] - 2 [O(0)] + l ([O(c)] - [O(0)])
// for y = (l1,l2,l3;l). The Euler form test in k0_test pins this against
// Hom/Ext^1 dimensions of line bundles.

#ifndef WPL_K0_HPP_
#define WPL_K0_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "wpl/lgroup.hpp"

namespace wpl {

class K0Class {
 public:
  K0Class() = default;
  explicit K0Class(std::vector<int64_t> coefficients)
      : coeffs_(std::move(coefficients)) {}

  const std::vector<int64_t>& coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  int64_t operator[](std::size_t i) const { return coeffs_[i]; }

  K0Class& operator+=(const K0Class& other);
  K0Class& operator-=(const K0Class& other);
  friend K0Class operator+(K0Class a, const K0Class& b) { return a += b; }
  friend K0Class operator-(K0Class a, const K0Class& b) { return a -= b; }
  friend K0Class operator*(int64_t k, K0Class a);
  K0Class operator-() const;

  bool operator==(const K0Class&) const = default;
  auto operator<=>(const K0Class&) const = default;

 private:
  std::vector<int64_t> coeffs_;
};

class K0 {
 public:
  explicit K0(WeightTriple weights);

  const LGroup& group() const { return g_; }
  const WeightTriple& weights() const { return g_.weights(); }

  // The basis line bundles, in coordinate order.
  const std::vector<LElement>& basis() const { return basis_; }
  std::size_t rank_of_group() const { return basis_.size(); }

  K0Class Zero() const { return K0Class(std::vector<int64_t>(basis_.size())); }
  K0Class Unit(std::size_t index) const;

  // [O(y)].
  K0Class ReduceLine(const LElement& y) const;
  // Sum of [O(y)] over a multiset.
  K0Class SumLines(const std::vector<LElement>& ys) const;

  // Bilinear extension of <[O(x)],[O(y)]> = dim Hom - dim Ext^1.
  int64_t EulerForm(const K0Class& a, const K0Class& b) const;

  int64_t RankOf(const K0Class& a) const;
  int64_t DegOf(const K0Class& a) const;
  LElement DetOf(const K0Class& a) const;

  // Class of the twist a(z): every basis line [O(b)] goes to [O(b + z)].
  K0Class Twist(const K0Class& a, const LElement& z) const;

  // Class of the torsion sheaf at the i-th exceptional point with top
  // S_{i,j} and length len. S_{i,j} is the simple quotient of O(j x_i),
  // i.e. the cokernel of O((j-1) x_i) -> O(j x_i), so
  //   [S_{i,j}^{(len)}] = [O(j x_i)] - [O((j - len) x_i)].
  // Throws PreconditionError for len <= 0.
  K0Class TorsionClass(int i, int64_t j, int64_t len) const;

  // "3[O(0)] - [O(x1)] + [O(c)]"
  std::string Format(const K0Class& a) const;

 private:
  std::size_t IndexOfMultiple(int i, int l) const;

  LGroup g_;
  std::vector<LElement> basis_;
  std::array<std::size_t, 3> offset_{};
  std::vector<int64_t> gram_;  // gram_[r * n + s] = <B_r, B_s>
};

}  // namespace wpl

#endif  // WPL_K0_HPP_

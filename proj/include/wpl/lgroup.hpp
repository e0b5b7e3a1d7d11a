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

// The grading group L of a weighted projective line with three weights:
// generators x1, x2, x3 subject to p1 x1 = p2 x2 = p3 x3 =: c.
//
// Every element has a unique normal form l1 x1 + l2 x2 + l3 x3 + l c with
// 0 <= l_i < p_i. LElement stores exactly that normal form; it is only ever
// produced by LGroup, so two LElements of the same group are equal iff they
// denote the same group element.
//
// Branch indices in this API are 1-based (i = 1, 2, 3) to match x1, x2, x3.

#ifndef WPL_LGROUP_HPP_
#define WPL_LGROUP_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wpl {

class WeightTriple {
 public:
  // Throws PreconditionError unless every weight is >= 2.
  WeightTriple(int p1, int p2, int p3);

  // Parses "p1,p2,p3". Throws ParseError / PreconditionError.
  static WeightTriple Parse(const std::string& text);

  int weight(int i) const { return p_[static_cast<std::size_t>(i - 1)]; }
  const std::array<int, 3>& weights() const { return p_; }
  // Least common multiple p of (p1, p2, p3).
  int64_t lcm() const { return lcm_; }

  // True exactly for {2,4,4}, {2,3,6}, {3,3,3} as multisets.
  bool is_genus_one() const;

  // Branch points of the line. Stored in the normalisation (inf, 0, 1);
  // nothing in the library depends on them.
  const std::array<std::string, 3>& branch_points() const { return lambda_; }

  // "(2,4,4)"
  std::string ToString() const;
  // "244"
  std::string Tag() const;

  bool operator==(const WeightTriple& other) const { return p_ == other.p_; }

 private:
  std::array<int, 3> p_;
  int64_t lcm_;
  std::array<std::string, 3> lambda_{"inf", "0", "1"};
};

// Normal form (l1, l2, l3; l) of an element of L.
struct LElement {
  std::array<int, 3> l{0, 0, 0};
  int64_t c = 0;

  auto operator<=>(const LElement&) const = default;
  bool operator==(const LElement&) const = default;

  bool is_effective() const { return c >= 0; }
};

// Named elements, see LGroup::Specials().
struct SpecialElements {
  LElement c;
  LElement omega;
  std::array<LElement, 3> xbar;  // xbar_i = x_i + omega
  LElement top;                  // 2 omega + c = sum (p_i - 2) x_i
};

class LGroup {
 public:
  explicit LGroup(WeightTriple weights) : w_(weights) {}

  const WeightTriple& weights() const { return w_; }

  // Normal form of a1 x1 + a2 x2 + a3 x3 + a c. Reduces l1, then l2, l3.
  LElement Normalize(int64_t a1, int64_t a2, int64_t a3, int64_t a) const;

  LElement Zero() const { return {}; }
  // k x_i
  LElement X(int i, int64_t k = 1) const;
  LElement C(int64_t k = 1) const { return Normalize(0, 0, 0, k); }
  LElement Omega() const;
  LElement XBar(int i) const;
  SpecialElements Specials() const;

  LElement Add(const LElement& a, const LElement& b) const;
  LElement Neg(const LElement& a) const;
  LElement Sub(const LElement& a, const LElement& b) const;
  LElement Scale(int64_t k, const LElement& a) const;

  // a <= b iff b - a is effective.
  bool Leq(const LElement& a, const LElement& b) const;

  // Degree homomorphism with delta(x_i) = p / p_i and delta(c) = p.
  int64_t Delta(const LElement& a) const;

  // {x : lo <= x <= hi} when hi - lo = sum m_i x_i with 0 <= m_i < p_i,
  // ordered lexicographically in (m1, m2, m3). Throws UnsupportedInterval for
  // any other shape (in particular when lo is not <= hi).
  std::vector<LElement> BoxPoints(const LElement& lo,
                                  const LElement& hi) const;
  // BoxPoints(0, 2 omega + c).
  std::vector<LElement> Box() const;

  // Canonical display "(l1,l2,l3;l)".
  static std::string Format(const LElement& a);
  // Readable expression such as "x1+2x3-c" or "0".
  static std::string FormatExpr(const LElement& a);

 private:
  WeightTriple w_;
};

}  // namespace wpl

#endif  // WPL_LGROUP_HPP_

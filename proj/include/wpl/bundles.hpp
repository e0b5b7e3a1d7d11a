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

// Rank-two extension bundles E<x>(z) and the stable objects built from them.
//
// E<x>(z) is the middle term of the non-split sequence
//   0 -> O(z + omega) -> E<x>(z) -> O(z + x) -> 0,   0 <= x <= 2 omega + c,
// so [E<x>(z)] = [O(z + omega)] + [O(z + x)] and det = 2z + x + omega.
// Extension bundles are exceptional, hence determined by their class; the
// library uses that fact for suspension (class matching) and cross-checks
// the presentation rule of EqExt against class equality in the tests.

#ifndef WPL_BUNDLES_HPP_
#define WPL_BUNDLES_HPP_

#include <array>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "wpl/k0.hpp"
#include "wpl/lgroup.hpp"

namespace wpl {

using Rational = boost::rational<int64_t>;

std::string FormatRational(const Rational& q);

// E<x>(z) with x = sum interior[i] x_{i+1}, 0 <= interior[i] <= p_{i+1} - 2.
struct ExtBundle {
  std::array<int, 3> interior{0, 0, 0};
  LElement twist;

  auto operator<=>(const ExtBundle&) const = default;
  bool operator==(const ExtBundle&) const = default;
};

// A short exact sequence 0 -> sub -> middle -> quotient -> 0 tracked by
// classes only.
struct SequenceRecord {
  std::string sub_label;
  std::string middle_label;
  std::string quotient_label;
  K0Class sub;
  K0Class middle;
  K0Class quotient;

  bool additive() const { return middle == sub + quotient; }
};

// Zero, an extension bundle, or a formal object X[shift] where X is pinned
// by its class (objects such as F_i, G, H of rank three and more).
class StableObject {
 public:
  enum class Kind { kZero, kExt, kFormal };

  static StableObject Zero();
  static StableObject Ext(const ExtBundle& bundle);
  // Throws PreconditionError if the rank does not match the class.
  static StableObject Formal(const K0& k0, std::string name, K0Class cls,
                             int64_t rank, int shift = 0,
                             std::vector<SequenceRecord> provenance = {});

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::kZero; }
  bool is_ext() const { return kind_ == Kind::kExt; }
  bool is_formal() const { return kind_ == Kind::kFormal; }

  const ExtBundle& bundle() const;
  const std::string& name() const { return name_; }
  // Class of the unshifted object.
  const K0Class& cls() const { return cls_; }
  int64_t rank() const { return rank_; }
  int shift() const { return shift_; }
  const std::vector<SequenceRecord>& provenance() const { return provenance_; }

  bool operator==(const StableObject& other) const;

 private:
  friend class Bundles;

  Kind kind_ = Kind::kZero;
  ExtBundle bundle_;
  std::string name_;
  K0Class cls_;
  int64_t rank_ = 0;
  int shift_ = 0;
  std::vector<SequenceRecord> provenance_;
};

class Bundles {
 public:
  explicit Bundles(WeightTriple weights);

  const K0& k0() const { return k0_; }
  const LGroup& group() const { return k0_.group(); }
  const WeightTriple& weights() const { return k0_.weights(); }

  bool InBox(const std::array<int, 3>& interior) const;
  // Throws PreconditionError when the interior vector is outside the box.
  ExtBundle Make(const std::array<int, 3>& interior,
                 const LElement& twist = {}) const;
  // Braced interiors such as Make({1, 0, 1}, z) resolve here.
  ExtBundle Make(std::initializer_list<int> interior,
                 const LElement& twist = {}) const;
  // Same, with x given as a group element (must have zero c-coefficient).
  ExtBundle Make(const LElement& x, const LElement& twist) const;
  // Auslander bundle E(z).
  ExtBundle Auslander(const LElement& twist = {}) const;

  LElement InteriorElement(const ExtBundle& a) const;
  K0Class ClassOf(const ExtBundle& a) const;
  // [O(z + omega)] + [O(z + x)] for arbitrary x, without the box check.
  K0Class ExtensionClass(const LElement& x, const LElement& z) const;
  LElement DetOf(const ExtBundle& a) const;

  // The presentations of a's isomorphism class: a itself and, for j = 1..3,
  //   E<l_j x_j + sum_{i != j} (p_i - 2 - l_i) x_i>(z + sum_{i != j}(l_i + 1) x_i - c).
  // Sorted and deduplicated; at most four entries.
  std::vector<ExtBundle> Orbit(const ExtBundle& a) const;
  bool EqExt(const ExtBundle& a, const ExtBundle& b) const;
  // Lexicographically least presentation in the orbit.
  ExtBundle CanonicalForm(const ExtBundle& a) const;

  ExtBundle Twist(const ExtBundle& a, const LElement& z) const;

  // I(E_L<x>) = O(z + x) + sum_i O(z + omega + (l_i + 1) x_i).
  std::vector<LElement> InjectiveHull(const ExtBundle& a) const;
  // P(E_L<x>) = O(z + omega) + sum_i O(z + x - (l_i + 1) x_i).
  std::vector<LElement> ProjectiveCover(const ExtBundle& a) const;

  // Canonical forms of all extension bundles with the given class, searched
  // over the box times {center + w : |w.c| <= 4}.
  std::vector<ExtBundle> MatchClass(const K0Class& cls,
                                    const LElement& center) const;
  // a[1]: the unique bundle with class sum I(a) - [a]. Throws SearchFailure
  // when the match is empty or ambiguous.
  ExtBundle Suspend(const ExtBundle& a) const;
  // a[-1], via the projective cover.
  ExtBundle Desuspend(const ExtBundle& a) const;

  // Twist by +-omega (the Auslander-Reiten translation).
  StableObject Tau(const StableObject& a) const;
  StableObject TauInv(const StableObject& a) const;
  StableObject TwistObject(const StableObject& a, const LElement& z) const;

  // Class of a stable object (the unshifted class for formal objects).
  K0Class ClassOf(const StableObject& a) const;
  // delta(det) / rank. Throws PreconditionError for zero objects and for
  // shifted formal objects.
  Rational Slope(const StableObject& a) const;
  Rational Slope(const ExtBundle& a) const;

  // "E<0,2,0>(x3)"
  static std::string Format(const ExtBundle& a);
  std::string Describe(const StableObject& a) const;

 private:
  static constexpr int kSearchRadius = 4;

  K0 k0_;
};

}  // namespace wpl

#endif  // WPL_BUNDLES_HPP_

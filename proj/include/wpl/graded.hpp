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

// Dimensions of graded pieces of S = k[x1,x2,x3]/(f3) and of Hom / Ext^1
// between line bundles.

#ifndef WPL_GRADED_HPP_
#define WPL_GRADED_HPP_

#include <cstdint>

#include "wpl/lgroup.hpp"

namespace wpl {

// dim S_x. After eliminating x3^{p3} through the defining relation, S has the
// monomial basis x1^a1 x2^a2 x3^a3 with a3 < p3, and the monomials of degree
// (l1,l2,l3;l) are x1^{l1 + p1 s} x2^{l2 + p2 (l - s)} x3^{l3}, 0 <= s <= l.
int64_t DimS(const LElement& x);

// dim Hom(O(x), O(y)) = dim S_{y-x}.
int64_t HomDimLine(const LGroup& g, const LElement& x, const LElement& y);

// dim Ext^1(O(x), O(y)) = dim Hom(O(y), O(x + omega)) by Serre duality.
int64_t Ext1DimLine(const LGroup& g, const LElement& x, const LElement& y);

}  // namespace wpl

#endif  // WPL_GRADED_HPP_

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

// Text forms of group elements and extension bundles.
//
// Group elements: either a normal form "(l1,l2,l3;l)" or a signed sum of
// terms "k*atom" / "k atom" / "atom" / "k", where atom is one of x1 x2 x3
// c w (omega) xbar1 xbar2 xbar3. A bare integer k means k c, except that
// "0" is the zero element. Examples: "x1-x2+x3", "2c", "-w", "3*x2+xbar1".
//
// Bundles: "E", "E(z)", "E<x>", "E<x>(z)" where x is either "l1,l2,l3" or a
// group element with zero c-coefficient.

#ifndef WPL_TEXTIO_HPP_
#define WPL_TEXTIO_HPP_

#include <string>
#include <vector>

#include "wpl/bundles.hpp"
#include "wpl/lgroup.hpp"

namespace wpl {

// Throws ParseError.
LElement ParseElement(const LGroup& g, const std::string& text);
// Throws ParseError, or PreconditionError for an interior outside the box.
ExtBundle ParseBundle(const Bundles& b, const std::string& text);
// "1,2,3" or "1 2 3". Throws ParseError.
std::vector<int> ParseIntList(const std::string& text);

}  // namespace wpl

#endif  // WPL_TEXTIO_HPP_

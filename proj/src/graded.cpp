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

#include "wpl/graded.hpp"

#include <algorithm>

namespace wpl {

int64_t DimS(const LElement& x) { return std::max<int64_t>(0, x.c + 1); }

int64_t HomDimLine(const LGroup& g, const LElement& x, const LElement& y) {
  return DimS(g.Sub(y, x));
}

int64_t Ext1DimLine(const LGroup& g, const LElement& x, const LElement& y) {
  return DimS(g.Sub(g.Add(x, g.Omega()), y));
}

}  // namespace wpl

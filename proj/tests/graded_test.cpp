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

#include <gtest/gtest.h>

namespace wpl {
namespace {

// Monomials x1^a1 x2^a2 x3^a3 of degree x with a3 < p3, counted by direct
// enumeration. delta bounds a1 and a2.
int64_t CountMonomials(const LGroup& g, const LElement& x) {
  const WeightTriple& w = g.weights();
  const int64_t d = g.Delta(x);
  if (d < 0) return 0;
  const int64_t p = w.lcm();
  int64_t n = 0;
  for (int64_t a3 = 0; a3 < w.weight(3); ++a3) {
    for (int64_t a2 = 0; a2 * (p / w.weight(2)) <= d; ++a2) {
      for (int64_t a1 = 0; a1 * (p / w.weight(1)) <= d; ++a1) {
        if (g.Normalize(a1, a2, a3, 0) == x) ++n;
      }
    }
  }
  return n;
}

std::vector<LElement> Window(const LGroup& g, int radius) {
  std::vector<LElement> out;
  for (int l = -radius; l <= radius; ++l) {
    const WeightTriple& w = g.weights();
    for (int a = 0; a < w.weight(1); ++a) {
      for (int b = 0; b < w.weight(2); ++b) {
        for (int d = 0; d < w.weight(3); ++d) {
          out.push_back(g.Normalize(a, b, d, l));
        }
      }
    }
  }
  return out;
}

TEST(GradedTest, ClosedFormMatchesMonomialCount) {
  for (const WeightTriple& w : {WeightTriple(2, 4, 4), WeightTriple(2, 3, 6),
                                WeightTriple(3, 3, 3), WeightTriple(2, 3, 7)}) {
    const LGroup g(w);
    for (const LElement& x : Window(g, 3)) {
      EXPECT_EQ(DimS(x), CountMonomials(g, x))
          << w.ToString() << " " << LGroup::Format(x);
    }
  }
}

TEST(GradedTest, Examples) {
  const LGroup g(WeightTriple(2, 3, 6));
  EXPECT_EQ(DimS(g.Zero()), 1);
  EXPECT_EQ(DimS(g.C(2)), 3);
  EXPECT_EQ(HomDimLine(g, g.Zero(), g.C()), 2);
  for (const WeightTriple& w : {WeightTriple(2, 4, 4), WeightTriple(2, 3, 6),
                                WeightTriple(3, 3, 3)}) {
    const LGroup h(w);
    EXPECT_EQ(DimS(h.Omega()), 0);
    EXPECT_EQ(HomDimLine(h, h.Zero(), h.Zero()), 1);
    EXPECT_EQ(Ext1DimLine(h, h.Zero(), h.Zero()), 0);
  }
}

TEST(GradedTest, ExtIsSerreDualToHom) {
  const LGroup g(WeightTriple(2, 4, 4));
  const auto pts = Window(g, 1);
  for (std::size_t s = 0; s < pts.size(); s += 7) {
    for (std::size_t t = 0; t < pts.size(); t += 5) {
      EXPECT_EQ(Ext1DimLine(g, pts[s], pts[t]),
                HomDimLine(g, pts[t], g.Add(pts[s], g.Omega())));
    }
  }
}

TEST(GradedTest, Monotone) {
  const LGroup g(WeightTriple(3, 3, 3));
  const auto pts = Window(g, 2);
  for (const LElement& x : pts) {
    for (int i = 1; i <= 3; ++i) {
      EXPECT_LE(DimS(x), DimS(g.Add(x, g.X(i))));
    }
  }
}

}  // namespace
}  // namespace wpl

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

#include "wpl/k0.hpp"

#include <random>

#include <gtest/gtest.h>

#include "wpl/bundles.hpp"
#include "wpl/error.hpp"
#include "wpl/graded.hpp"

namespace wpl {
namespace {

const WeightTriple kTriples[] = {{2, 4, 4}, {2, 3, 6}, {3, 3, 3}, {2, 3, 7}};

std::vector<LElement> Window(const LGroup& g, int radius) {
  std::vector<LElement> out;
  const WeightTriple& w = g.weights();
  for (int l = -radius; l <= radius; ++l) {
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

TEST(K0Test, BasisIsTheInterval) {
  for (const WeightTriple& w : kTriples) {
    const K0 k0(w);
    const LGroup& g = k0.group();
    const int64_t expected = 2 + (w.weight(1) - 1) + (w.weight(2) - 1) +
                             (w.weight(3) - 1);
    ASSERT_EQ(static_cast<int64_t>(k0.basis().size()), expected);
    for (std::size_t r = 0; r < k0.basis().size(); ++r) {
      const LElement& b = k0.basis()[r];
      EXPECT_TRUE(g.Leq(g.Zero(), b) && g.Leq(b, g.C()));
      EXPECT_EQ(k0.ReduceLine(b), k0.Unit(r));
    }
    int in_interval = 0;
    for (const LElement& y : Window(g, 1)) {
      in_interval += g.Leq(g.Zero(), y) && g.Leq(y, g.C());
    }
    EXPECT_EQ(in_interval, expected);
  }
}

// The pairing against the basis separates classes, so this pins ReduceLine.
TEST(K0Test, EulerFormMatchesLineBundleDimensions) {
  for (const WeightTriple& w : kTriples) {
    const K0 k0(w);
    const LGroup& g = k0.group();
    for (const LElement& b : k0.basis()) {
      for (const LElement& y : Window(g, 3)) {
        const int64_t expected = HomDimLine(g, b, y) - Ext1DimLine(g, b, y);
        EXPECT_EQ(k0.EulerForm(k0.ReduceLine(b), k0.ReduceLine(y)), expected)
            << w.ToString() << " " << LGroup::Format(b) << " "
            << LGroup::Format(y);
        const int64_t reverse = HomDimLine(g, y, b) - Ext1DimLine(g, y, b);
        EXPECT_EQ(k0.EulerForm(k0.ReduceLine(y), k0.ReduceLine(b)), reverse);
      }
    }
  }
}

TEST(K0Test, ReductionExamples) {
  const K0 k0(WeightTriple(3, 3, 3));
  const LGroup& g = k0.group();
  // basis order: 0, x1, 2x1, x2, 2x2, x3, 2x3, c
  EXPECT_EQ(k0.ReduceLine(g.Zero()), k0.Unit(0));
  EXPECT_EQ(k0.ReduceLine(g.Normalize(1, 1, 1, 0)),
            k0.Unit(1) + k0.Unit(3) + k0.Unit(5) - 2 * k0.Unit(0));
  EXPECT_EQ(k0.ReduceLine(g.Add(g.C(), g.X(2))),
            k0.Unit(3) + k0.Unit(7) - k0.Unit(0));
}

TEST(K0Test, ReductionStructure) {
  for (const WeightTriple& w : kTriples) {
    const K0 k0(w);
    const LGroup& g = k0.group();
    const std::size_t last = k0.basis().size() - 1;
    const K0Class tube = k0.Unit(last) - k0.Unit(0);
    for (const LElement& y : Window(g, 2)) {
      const K0Class r = k0.ReduceLine(y);
      EXPECT_EQ(k0.RankOf(r), 1);
      EXPECT_EQ(k0.DetOf(r), y);
      EXPECT_EQ(k0.DegOf(r), g.Delta(y));
      EXPECT_EQ(k0.ReduceLine(g.Add(y, g.C())) - r, tube);
      for (int i = 1; i <= 3; ++i) {
        // The step depends only on i and the i-th coefficient.
        LElement base = g.Normalize(0, 0, 0, 0);
        base.l[static_cast<std::size_t>(i - 1)] = y.l[static_cast<std::size_t>(i - 1)];
        EXPECT_EQ(k0.ReduceLine(g.Add(y, g.X(i))) - r,
                  k0.ReduceLine(g.Add(base, g.X(i))) - k0.ReduceLine(base));
      }
    }
  }
}

TEST(K0Test, EulerFormExamplesAndBilinearity) {
  const K0 k0(WeightTriple(2, 3, 6));
  const LGroup& g = k0.group();
  EXPECT_EQ(k0.EulerForm(k0.ReduceLine(g.Zero()), k0.ReduceLine(g.Zero())), 1);
  EXPECT_EQ(k0.EulerForm(k0.ReduceLine(g.Zero()), k0.ReduceLine(g.C())), 2);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_class = [&] {
    std::vector<int64_t> v(k0.basis().size());
    for (auto& c : v) c = coef(rng);
    return K0Class(v);
  };
  for (int n = 0; n < 100; ++n) {
    const K0Class a = random_class();
    const K0Class b = random_class();
    const K0Class c = random_class();
    const int64_t k = coef(rng);
    EXPECT_EQ(k0.EulerForm(a + k * b, c),
              k0.EulerForm(a, c) + k * k0.EulerForm(b, c));
    EXPECT_EQ(k0.EulerForm(c, a + k * b),
              k0.EulerForm(c, a) + k * k0.EulerForm(c, b));
  }
}

TEST(K0Test, RankDegreeDeterminant) {
  const K0 k0(WeightTriple(2, 4, 4));
  const LGroup& g = k0.group();
  const K0Class tube = k0.Unit(k0.basis().size() - 1) - k0.Unit(0);
  EXPECT_EQ(k0.RankOf(tube), 0);
  EXPECT_EQ(k0.DetOf(tube), g.C());
  const Bundles b(WeightTriple(2, 4, 4));
  EXPECT_EQ(k0.DegOf(b.ClassOf(b.Auslander())), 0);
}

TEST(K0Test, TorsionClasses) {
  for (const WeightTriple& w : kTriples) {
    const K0 k0(w);
    const K0Class tube = k0.Unit(k0.basis().size() - 1) - k0.Unit(0);
    for (int i = 1; i <= 3; ++i) {
      for (int j = 0; j < w.weight(i); ++j) {
        EXPECT_EQ(k0.TorsionClass(i, j, w.weight(i)), tube);
        for (int len = 1; len <= w.weight(i); ++len) {
          EXPECT_EQ(k0.RankOf(k0.TorsionClass(i, j, len)), 0);
        }
      }
    }
    EXPECT_THROW(k0.TorsionClass(1, 0, 0), PreconditionError);
  }
  // The simple S_{i,j} is the top of O(j x_i): Hom(O(j x_i), S_{i,j}) != 0,
  // seen through the Euler form since Ext^1(O(j x_i), S_{i,j}) = 0.
  const K0 k0(WeightTriple(2, 4, 4));
  const LGroup& g = k0.group();
  for (int j = 0; j < 4; ++j) {
    EXPECT_EQ(k0.EulerForm(k0.ReduceLine(g.X(2, j)), k0.TorsionClass(2, j, 1)), 1);
  }
}

TEST(K0Test, TorsionClassInTheTwistTriangle) {
  for (const WeightTriple& w : {WeightTriple(2, 4, 4), WeightTriple(2, 3, 6)}) {
    const Bundles b(w);
    const LGroup& g = b.group();
    const K0& k0 = b.k0();
    const int k = 3;
    const int pk = w.weight(k);
    const K0Class lhs = k0.ReduceLine(g.Zero()) + k0.ReduceLine(g.XBar(k)) +
                        k0.TorsionClass(k, pk - 2, pk - 2);
    EXPECT_EQ(lhs, b.ClassOf(b.Make(g.X(k, pk - 3), g.X(k)))) << w.ToString();
  }
}

}  // namespace
}  // namespace wpl

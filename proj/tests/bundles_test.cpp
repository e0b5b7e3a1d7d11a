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

#include "wpl/bundles.hpp"

#include <gtest/gtest.h>

#include "wpl/error.hpp"

namespace wpl {
namespace {

const WeightTriple kTriples[] = {{2, 4, 4}, {2, 3, 6}, {3, 3, 3}, {2, 3, 7}};
const WeightTriple kGenusOne[] = {{2, 4, 4}, {2, 3, 6}, {3, 3, 3}};

std::vector<ExtBundle> BoxBundles(const Bundles& b, const LElement& twist = {}) {
  std::vector<ExtBundle> out;
  for (const LElement& x : b.group().Box()) out.push_back(b.Make(x, twist));
  return out;
}

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

std::vector<LElement> Sorted(std::vector<LElement> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(BundlesTest, ClassAndDeterminant) {
  for (const WeightTriple& w : kTriples) {
    const Bundles b(w);
    const LGroup& g = b.group();
    for (const LElement& z : {g.Zero(), g.X(1), g.Omega(), g.C(-2)}) {
      for (const ExtBundle& e : BoxBundles(b, z)) {
        const K0Class cls = b.ClassOf(e);
        EXPECT_EQ(b.k0().RankOf(cls), 2);
        EXPECT_EQ(b.k0().DetOf(cls), b.DetOf(e));
        const LElement x = b.InteriorElement(e);
        EXPECT_EQ(b.DetOf(e), g.Add(g.Add(g.Scale(2, z), x), g.Omega()));
        EXPECT_EQ(cls, b.k0().ReduceLine(g.Add(z, g.Omega())) +
                           b.k0().ReduceLine(g.Add(z, x)));
      }
    }
  }
}

TEST(BundlesTest, MakeChecksTheBox) {
  const Bundles b(WeightTriple(2, 4, 4));
  EXPECT_THROW(b.Make({1, 0, 0}), PreconditionError);
  EXPECT_THROW(b.Make({0, -1, 0}), PreconditionError);
  EXPECT_THROW(b.Make(b.group().C(), {}), PreconditionError);
}

// Rule-based equality against the class oracle. Twisting both sides by the
// same element preserves both, so the first twist is fixed at 0.
TEST(BundlesTest, PresentationRuleMatchesClassEquality) {
  for (const WeightTriple& w : kTriples) {
    const Bundles b(w);
    const auto zs = Window(b.group(), 2);
    int discrepancies = 0;
    int equal = 0;
    for (const ExtBundle& a : BoxBundles(b)) {
      for (const LElement& y : b.group().Box()) {
        for (const LElement& z : zs) {
          const ExtBundle c = b.Make(y, z);
          const bool by_rule = b.EqExt(a, c);
          const bool by_class = b.ClassOf(a) == b.ClassOf(c);
          discrepancies += by_rule != by_class;
          equal += by_rule;
          EXPECT_EQ(b.EqExt(c, a), by_rule);
          EXPECT_EQ(b.CanonicalForm(a) == b.CanonicalForm(c), by_rule);
        }
      }
    }
    EXPECT_EQ(discrepancies, 0) << w.ToString();
    EXPECT_GT(equal, 0);
  }
}

TEST(BundlesTest, KnownIdentities) {
  const Bundles b244(WeightTriple(2, 4, 4));
  const LGroup& g = b244.group();
  EXPECT_TRUE(b244.EqExt(b244.Make({0, 2, 0}, g.X(3)),
                         b244.Auslander(g.Normalize(1, -1, 1, 0))));
  const Bundles b333(WeightTriple(3, 3, 3));
  const LGroup& h = b333.group();
  EXPECT_TRUE(b333.EqExt(b333.Make({1, 0, 1}),
                         b333.Auslander(h.Add(h.Omega(), h.X(2)))));
  EXPECT_TRUE(b333.EqExt(b333.Make({1, 0, 1}),
                         b333.Auslander(h.Normalize(-1, 0, -1, 1))));
}

TEST(BundlesTest, Orbits) {
  const Bundles b(WeightTriple(3, 3, 3));
  EXPECT_EQ(b.Orbit(b.Auslander()).size(), 4u);
  for (const WeightTriple& w : kTriples) {
    const Bundles c(w);
    for (const ExtBundle& e : BoxBundles(c, c.group().X(2))) {
      const auto orbit = c.Orbit(e);
      EXPECT_LE(orbit.size(), 4u);
      EXPECT_EQ(orbit.front(), c.CanonicalForm(e));
      EXPECT_EQ(c.CanonicalForm(c.CanonicalForm(e)), c.CanonicalForm(e));
      for (const ExtBundle& o : orbit) EXPECT_EQ(c.ClassOf(o), c.ClassOf(e));
    }
  }
}

TEST(BundlesTest, Hulls) {
  for (const WeightTriple& w : kTriples) {
    const Bundles b(w);
    const LGroup& g = b.group();
    EXPECT_EQ(Sorted(b.InjectiveHull(b.Auslander())),
              Sorted({g.Zero(), g.XBar(1), g.XBar(2), g.XBar(3)}));
    for (int i = 1; i <= 3; ++i) {
      const LElement xb = g.XBar(i);
      EXPECT_EQ(Sorted(b.ProjectiveCover(b.Auslander(xb))),
                Sorted({g.Add(xb, g.Omega()), g.Sub(xb, g.X(1)),
                        g.Sub(xb, g.X(2)), g.Sub(xb, g.X(3))}));
    }
    for (const ExtBundle& e : BoxBundles(b, g.X(1))) {
      const K0Class cls = b.ClassOf(e);
      EXPECT_EQ(b.k0().RankOf(b.k0().SumLines(b.InjectiveHull(e)) - cls), 2);
      EXPECT_EQ(b.k0().RankOf(b.k0().SumLines(b.ProjectiveCover(e)) - cls), 2);
    }
  }
  const Bundles b(WeightTriple(2, 4, 4));
  const LGroup& g = b.group();
  EXPECT_EQ(Sorted(b.ProjectiveCover(b.Make({0, 1, 1}))),
            Sorted({g.Omega(), g.Normalize(0, 1, -1, 0),
                    g.Normalize(0, -1, 1, 0), g.Neg(g.Omega())}));
}

TEST(BundlesTest, SuspensionRoundTrip) {
  for (const WeightTriple& w : kTriples) {
    const Bundles b(w);
    for (const ExtBundle& e : BoxBundles(b)) {
      const ExtBundle s = b.Suspend(e);
      EXPECT_EQ(b.ClassOf(s), b.k0().SumLines(b.InjectiveHull(e)) - b.ClassOf(e));
      EXPECT_TRUE(b.EqExt(b.Desuspend(s), e)) << Bundles::Format(e);
      EXPECT_TRUE(b.EqExt(b.Suspend(b.Desuspend(e)), e));
    }
  }
}

TEST(BundlesTest, SuspensionIsABijectionOnBoxBundles) {
  for (const WeightTriple& w : kGenusOne) {
    const Bundles b(w);
    std::vector<ExtBundle> images;
    for (const ExtBundle& e : BoxBundles(b)) {
      images.push_back(b.CanonicalForm(b.Suspend(e)));
    }
    std::sort(images.begin(), images.end());
    EXPECT_EQ(std::adjacent_find(images.begin(), images.end()), images.end());
  }
}

TEST(BundlesTest, DoubleSuspensionIsTwistByC) {
  for (const WeightTriple& w : kTriples) {
    const Bundles b(w);
    for (const ExtBundle& e : BoxBundles(b)) {
      EXPECT_TRUE(b.EqExt(b.Suspend(b.Suspend(e)), b.Twist(e, b.group().C())));
    }
  }
}

TEST(BundlesTest, SuspensionExamples) {
  const Bundles b(WeightTriple(3, 3, 3));
  const LGroup& g = b.group();
  EXPECT_TRUE(b.EqExt(b.Suspend(b.Make({1, 0, 1})), b.Make({1, 1, 1}, g.X(2))));
  EXPECT_TRUE(b.EqExt(b.Suspend(b.Auslander()),
                      b.Make({1, 1, 1}, g.Neg(g.Omega()))));
}

TEST(BundlesTest, TauAndSlopes) {
  const Bundles b(WeightTriple(2, 4, 4));
  const LGroup& g = b.group();
  const ExtBundle e = b.Make({0, 1, 2}, g.X(2));
  const StableObject t = b.Tau(StableObject::Ext(e));
  ASSERT_TRUE(t.is_ext());
  EXPECT_EQ(t.bundle(), b.Twist(e, g.Omega()));
  EXPECT_EQ(b.TauInv(t), StableObject::Ext(e));

  const K0Class cls = b.ClassOf(e) + b.k0().ReduceLine(g.X(1));
  const StableObject f = StableObject::Formal(b.k0(), "F", cls, 3);
  const StableObject tf = b.Tau(f);
  EXPECT_EQ(b.k0().DetOf(tf.cls()), g.Add(b.k0().DetOf(cls), g.Scale(3, g.Omega())));
  EXPECT_EQ(b.TauInv(tf), f);
  EXPECT_THROW(StableObject::Formal(b.k0(), "bad", cls, 2), PreconditionError);

  for (const WeightTriple& w : kGenusOne) {
    const Bundles c(w);
    EXPECT_EQ(c.Slope(c.Auslander()), Rational(0));
    const Rational top = c.Slope(c.Make(c.group().Specials().top, {}));
    EXPECT_EQ(top, Rational(c.group().Delta(c.group().C()), 2));
  }
  EXPECT_THROW(b.Slope(StableObject::Zero()), PreconditionError);
}

}  // namespace
}  // namespace wpl

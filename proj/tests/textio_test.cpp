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

#include "wpl/textio.hpp"

#include <gtest/gtest.h>

#include "wpl/error.hpp"

namespace wpl {
namespace {

TEST(ParseElementTest, Grammar) {
  const LGroup g(WeightTriple(2, 3, 6));
  EXPECT_EQ(ParseElement(g, "w"), g.Omega());
  EXPECT_EQ(ParseElement(g, "omega"), g.Omega());
  EXPECT_EQ(ParseElement(g, "0"), g.Zero());
  EXPECT_EQ(ParseElement(g, "2c"), g.C(2));
  EXPECT_EQ(ParseElement(g, "2"), g.C(2));
  EXPECT_EQ(ParseElement(g, "-c"), g.C(-1));
  EXPECT_EQ(ParseElement(g, "3*x2 + x3"), g.Normalize(0, 3, 1, 0));
  EXPECT_EQ(ParseElement(g, "x1-x2+x3"), g.Normalize(1, -1, 1, 0));
  EXPECT_EQ(ParseElement(g, "xbar1"), g.XBar(1));
  EXPECT_EQ(ParseElement(g, "2 x3 - w"), g.Sub(g.X(3, 2), g.Omega()));
  EXPECT_EQ(ParseElement(g, "(1,2,5;-2)"), g.Omega());
  EXPECT_EQ(ParseElement(g, "(0,-1,0;0)"), g.Normalize(0, -1, 0, 0));
}

TEST(ParseElementTest, Errors) {
  const LGroup g(WeightTriple(2, 3, 6));
  EXPECT_THROW(ParseElement(g, ""), ParseError);
  EXPECT_THROW(ParseElement(g, "x4"), ParseError);
  EXPECT_THROW(ParseElement(g, "x1 x2"), ParseError);
  EXPECT_THROW(ParseElement(g, "x1+"), ParseError);
  EXPECT_THROW(ParseElement(g, "(1,2;3)"), ParseError);
  EXPECT_THROW(ParseElement(g, "99999999999999x1"), ParseError);
}

TEST(ParseBundleTest, Forms) {
  const Bundles b(WeightTriple(2, 4, 4));
  const LGroup& g = b.group();
  EXPECT_EQ(ParseBundle(b, "E"), b.Auslander());
  EXPECT_EQ(ParseBundle(b, "E(x1-x2+x3)"), b.Auslander(g.Normalize(1, -1, 1, 0)));
  EXPECT_EQ(ParseBundle(b, "E<0,2,0>(x3)"), b.Make({0, 2, 0}, g.X(3)));
  EXPECT_EQ(ParseBundle(b, "E<2x2>(x3)"), b.Make({0, 2, 0}, g.X(3)));
  EXPECT_EQ(ParseBundle(b, "E<x2+x3>"), b.Make({0, 1, 1}));
  EXPECT_EQ(ParseBundle(b, "E<0,0,0>((0,0,0;1))"), b.Auslander(g.C()));
  EXPECT_EQ(ParseBundle(b, Bundles::Format(b.Make({0, 1, 2}, g.Omega()))),
            b.Make({0, 1, 2}, g.Omega()));
}

TEST(ParseBundleTest, Errors) {
  const Bundles b(WeightTriple(2, 4, 4));
  EXPECT_THROW(ParseBundle(b, "F"), ParseError);
  EXPECT_THROW(ParseBundle(b, "E<0,2,0"), ParseError);
  EXPECT_THROW(ParseBundle(b, "E(x1"), ParseError);
  EXPECT_THROW(ParseBundle(b, "E<0,3,0>"), PreconditionError);
  EXPECT_THROW(ParseBundle(b, "E<x1>"), PreconditionError);
  EXPECT_THROW(ParseBundle(b, "E<c>"), PreconditionError);
}

TEST(ParseIntListTest, Lists) {
  EXPECT_EQ(ParseIntList("1,2,3"), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(ParseIntList(" 4 , 5 "), (std::vector<int>{4, 5}));
  EXPECT_EQ(ParseIntList("1 2"), (std::vector<int>{1, 2}));
  EXPECT_TRUE(ParseIntList("").empty());
  EXPECT_THROW(ParseIntList("1,a"), ParseError);
}

}  // namespace
}  // namespace wpl

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

#include "wpl/fixtures.hpp"

#include <functional>
#include <map>

#include "wpl/error.hpp"

namespace wpl {

namespace {

Vertex V(int id, std::string label, int row, int col) {
  return Vertex{id, std::move(label), row, col};
}

// 3x3 grid; position (r, c) holds E<c x2 + r x3>.
std::vector<Vertex> Grid244(bool algebra, bool mutated) {
  if (!mutated) {
    return {V(3, "tau^-1 E[1]", 0, 0),       V(6, "E<x2>", 0, 1),
            V(1, "E<2x2>", 0, 2),            V(7, "E<x3>", 1, 0),
            V(5, "E<x2+x3>", 1, 1),          V(8, "E<2x2+x3>", 1, 2),
            V(2, "E<2x3>", 2, 0),            V(9, "E<x2+2x3>", 2, 1),
            V(4, "E<2x2+2x3>", 2, 2)};
  }
  auto shifted = [algebra](const std::string& s) {
    return algebra ? "tau^-1 " + s + "[1]" : s;
  };
  return {V(3, shifted("E*"), 0, 0),
          V(6, shifted("E<x2>"), 0, 1),
          V(1, "E(x1-x2+x3)", 0, 2),
          V(7, shifted("E<x3>"), 1, 0),
          V(5, shifted("E(-w)"), 1, 1),
          V(8, "E<2x2+x3>", 1, 2),
          V(2, "E(x1+x2-x3)", 2, 0),
          V(9, "E<x2+2x3>", 2, 1),
          V(4, "E<2x2+2x3>*", 2, 2)};
}

Quiver Cuboid244() {
  // right, down, and up-left diagonals
  return Quiver(Grid244(false, false),
                {{3, 6, 1}, {6, 1, 1}, {7, 5, 1}, {5, 8, 1}, {2, 9, 1},
                 {9, 4, 1}, {3, 7, 1}, {7, 2, 1}, {6, 5, 1}, {5, 9, 1},
                 {1, 8, 1}, {8, 4, 1}, {5, 3, 1}, {8, 6, 1}, {9, 7, 1},
                 {4, 5, 1}});
}

Quiver Tubular244(bool with_wrap, bool algebra) {
  std::vector<Arrow> arrows = {{6, 3, 1}, {1, 6, 1}, {7, 3, 1}, {5, 3, 1},
                               {8, 1, 1}, {2, 7, 1}, {9, 2, 1}, {4, 5, 1},
                               {4, 9, 1}, {4, 8, 1}};
  if (with_wrap) arrows.push_back({3, 4, 1});
  return Quiver(Grid244(algebra, true), arrows);
}

// 2x5 grid; row 0 holds E<c x3>, row 1 holds E<x2 + c x3>.
Quiver Cuboid236() {
  std::vector<Vertex> v = {
      V(7, "tau^-1 E[1]", 0, 0), V(8, "E<x3>", 0, 1),
      V(5, "E<2x3>", 0, 2),      V(9, "E<3x3>", 0, 3),
      V(1, "E<4x3>", 0, 4),      V(3, "E<x2>", 1, 0),
      V(10, "E<x2+x3>", 1, 1),   V(4, "E<x2+2x3>", 1, 2),
      V(6, "E<x2+3x3>", 1, 3),   V(2, "E<x2+4x3>", 1, 4)};
  const int top[5] = {7, 8, 5, 9, 1};
  const int bottom[5] = {3, 10, 4, 6, 2};
  std::vector<Arrow> arrows;
  for (int c = 0; c < 5; ++c) {
    if (c < 4) {
      arrows.push_back({top[c], top[c + 1], 1});
      arrows.push_back({bottom[c], bottom[c + 1], 1});
    }
    arrows.push_back({top[c], bottom[c], 1});
    if (c > 0) arrows.push_back({bottom[c], top[c - 1], 1});
  }
  return Quiver(v, arrows);
}

Quiver Tubular236(bool with_wrap) {
  std::vector<Vertex> v = {
      V(9, "E<3x3>", 0, 1),
      V(5, "E(3x3)", 0, 5),
      V(6, "tau H[-1]", 1, 0),
      V(2, "E(2x2-2x3)", 1, 3),
      V(4, "tau^-1 E<x2+2x3>*[1]", 1, 6),
      V(1, "E<4x3>**", 2, 1),
      V(10, "E<x2+x3>", 2, 2),
      V(3, "E<x2>(x3)", 2, 3),
      V(7, "tau^-1 E[1]", 2, 4),
      V(8, "tau^-1 E<x3>[1]", 2, 5)};
  std::vector<Arrow> arrows = {{9, 5, 1}, {5, 4, 1},  {6, 9, 1},
                               {6, 1, 1}, {6, 2, 1},  {2, 4, 1},
                               {1, 10, 1}, {10, 3, 1}, {3, 7, 1},
                               {7, 8, 1}, {8, 4, 1}};
  if (with_wrap) arrows.push_back({4, 6, 1});
  return Quiver(v, arrows);
}

// The cuboid object for (3,3,3) with E<x1+x2+x3> replaced by G; the vertices to mutate
// are E<x2+x3>, E<x1+x3>, E<x1+x2> with ids 1, 2, 3.
Quiver TBar333() {
  std::vector<Vertex> v = {
      V(1, "E<x2+x3>", 0, 3), V(2, "E<x1+x3>", 1, 3), V(3, "E<x1+x2>", 2, 3),
      V(4, "E", 1, 0),        V(5, "E<x1>", 0, 1),    V(6, "E<x2>", 1, 1),
      V(7, "E<x3>", 2, 1),    V(8, "G", 1, 2)};
  return Quiver(v, {{4, 5, 1}, {4, 6, 1}, {4, 7, 1}, {5, 8, 1}, {6, 8, 1},
                    {7, 8, 1}, {8, 4, 1}, {8, 1, 1}, {8, 2, 1}, {8, 3, 1},
                    {1, 5, 1}, {2, 6, 1}, {3, 7, 1}});
}

Quiver Tubular333(bool with_wrap) {
  std::vector<Vertex> v = {
      V(1, "F1[-1]", 0, 2), V(2, "F2[-1]", 1, 2), V(3, "F3[-1]", 2, 2),
      V(4, "E", 1, 0),      V(5, "E<x1>", 0, 1),  V(6, "E<x2>", 1, 1),
      V(7, "E<x3>", 2, 1),  V(8, "G", 1, 3)};
  std::vector<Arrow> arrows = {{4, 5, 1}, {4, 6, 1}, {4, 7, 1},
                               {5, 1, 1}, {6, 2, 1}, {7, 3, 1},
                               {1, 8, 1}, {2, 8, 1}, {3, 8, 1}};
  if (with_wrap) arrows.push_back({8, 4, 1});
  return Quiver(v, arrows);
}

struct Entry {
  std::function<Quiver()> make;
  std::string description;
};

const std::map<std::string, Entry>& Catalog() {
  static const std::map<std::string, Entry> catalog = {
      {"cuboid_cluster_244",
       {Cuboid244, "(2,4,4): cluster quiver of the cuboid tilting object, mutation ids 3,1,5,2,4"}},
      {"cuboid_cluster_236",
       {Cuboid236,
        "(2,3,6): cluster quiver of the cuboid tilting object, mutation ids a,b,5,c,1 / 3,d,4,6,2 "
        "(a..d are ids 7..10)"}},
      {"tbar_cluster_333",
       {TBar333, "(3,3,3): cluster quiver of the replacement object, "
                 "mutation ids 1,2,3 on E<x_j+x_k>"}},
      {"target_tubular_244",
       {[] { return Tubular244(true, false); },
        "(2,4,4): cluster quiver after mutating 1,2,3,4,5"}},
      {"target_tubular_236",
       {[] { return Tubular236(true); },
        "(2,3,6): cluster quiver after mutating 1,2,3,4,5,6,1"}},
      {"target_tubular_333",
       {[] { return Tubular333(true); },
        "(3,3,3): cluster quiver after mutating 1,2,3"}},
      {"tubular_algebra_244",
       {[] { return Tubular244(false, true); },
        "(2,4,4): quiver of the tubular endomorphism algebra"}},
      {"tubular_algebra_236",
       {[] { return Tubular236(false); },
        "(2,3,6): quiver of the tubular endomorphism algebra"}},
      {"tubular_algebra_333",
       {[] { return Tubular333(false); },
        "(3,3,3): quiver of the tubular endomorphism algebra"}},
  };
  return catalog;
}

const Entry& Lookup(const std::string& name) {
  const auto& c = Catalog();
  auto it = c.find(name);
  if (it == c.end()) throw UnknownFixture("unknown fixture \"" + name + "\"");
  return it->second;
}

}  // namespace

std::vector<std::string> FixtureNames() {
  std::vector<std::string> out;
  for (const auto& [name, entry] : Catalog()) out.push_back(name);
  return out;
}

Quiver GetFixture(const std::string& name) { return Lookup(name).make(); }

std::string FixtureDescription(const std::string& name) {
  return Lookup(name).description;
}

}  // namespace wpl

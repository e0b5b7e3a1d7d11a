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

// Named quivers: the cluster quivers of the cuboid tilting objects, the
// replacement object for (3,3,3), and the tubular targets.
//
// Ids follow the mutation figures: numbered vertices keep their numbers,
// the remaining ones are numbered after them in row-major order. Labels
// name the object sitting at each vertex.

#ifndef WPL_FIXTURES_HPP_
#define WPL_FIXTURES_HPP_

#include <string>
#include <vector>

#include "wpl/quiver.hpp"

namespace wpl {

// All fixture names, sorted.
std::vector<std::string> FixtureNames();
// Throws UnknownFixture.
Quiver GetFixture(const std::string& name);
std::string FixtureDescription(const std::string& name);

}  // namespace wpl

#endif  // WPL_FIXTURES_HPP_

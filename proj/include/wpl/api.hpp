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

// JSON request handlers shared by the command-line tool and the HTTP
// service. Both front ends build the same request object, call the same
// handler and print Render(result), so their output is byte-identical.
//
// Every response carries "schema": "1". Quivers are
//   {"vertices": [{"id": 1, "label": "E"}, ...],
//    "arrows": [{"from": 1, "to": 2, "mult": 1}, ...]}
// and wherever a request expects a quiver, a fixture name string is accepted
// as well.

#ifndef WPL_API_HPP_
#define WPL_API_HPP_

#include <string>

#include "json.hpp"
#include "wpl/lgroup.hpp"
#include "wpl/quiver.hpp"
#include "wpl/replay.hpp"

namespace wpl::api {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "1";

Json QuiverToJson(const Quiver& q);
// Throws ParseError for malformed input, InvariantViolation for loops or
// 2-cycles, PreconditionError for duplicate or dangling ids.
Quiver QuiverFromJson(const Json& j);
// An object is parsed as a quiver, a string names a fixture.
Quiver ResolveQuiver(const Json& j);
// "2,4,4" or [2, 4, 4].
WeightTriple WeightsFromJson(const Json& j);

Json ReportToJson(const ReplayReport& r);
// Plain-text rendering of a report, one identity per line.
std::string ReportToText(const ReplayReport& r);

// Endpoint handlers. Each takes the request body and returns the response
// body; errors are thrown and mapped by StatusFor.
Json ListFixtures();
Json ShowFixture(const std::string& name);
Json Mutate(const Json& req);        // {quiver, vertex}
Json Apply(const Json& req);         // {quiver, sequence}
Json Iso(const Json& req);           // {q1, q2}
Json Search(const Json& req);        // {source, target, maxDepth}
Json BundleEq(const Json& req);      // {weights, a, b}
Json Replay(const std::string& tag);

// Handlers without an HTTP route, used by the command-line tool.
Json NormalForm(const Json& req);    // {weights, expr}
Json Delta(const Json& req);         // {weights, expr}
Json HomDim(const Json& req);        // {weights, x, y}
Json K0Reduce(const Json& req);      // {weights, expr}
Json Euler(const Json& req);         // {weights, a, b}, lines or bundles
Json Suspend(const Json& req);       // {weights, bundle, inverse?}
Json Hulls(const Json& req);         // {weights, bundle}
Json Slope(const Json& req);         // {weights, bundle}

// HTTP status for an exception thrown by a handler: 400 for malformed
// input, 404 for unknown fixtures, 422 for loops and 2-cycles, 500 otherwise.
int StatusFor(const std::exception& e);
Json ErrorBody(const std::exception& e);

struct Response {
  int status = 200;
  std::string body;
};

// Routes a request to its handler. Unknown routes give 404.
Response Handle(const std::string& method, const std::string& path,
                const std::string& body);

// Pretty-printed JSON with a trailing newline.
std::string Render(const Json& j);

}  // namespace wpl::api

#endif  // WPL_API_HPP_

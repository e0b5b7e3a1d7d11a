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

#ifndef WPL_ERROR_HPP_
#define WPL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace wpl {

// Malformed textual or JSON input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value violates a documented precondition (bad weights, interior vector
// outside the box, unknown vertex id, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A quiver with loops or 2-cycles.
class InvariantViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownFixture : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An interval [lo, hi] in L that is not of the form lo + [0, sum m_i x_i].
class UnsupportedInterval : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The class-matching search behind suspension found no presentation, or
// several non-equivalent ones.
class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that a verification pipeline expected to hold did not.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wpl

#endif  // WPL_ERROR_HPP_

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

// Class-level verification of the exchange triangles behind the tubular
// tilting objects, and end-to-end replays for (2,4,4), (2,3,6), (3,3,3).
//
// Objects of rank three or more are tracked as formal objects pinned by
// their class and the short exact sequence defining them. Every identity is
// recorded with both sides rendered as text, so a report can be re-checked
// without recomputation.

#ifndef WPL_REPLAY_HPP_
#define WPL_REPLAY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "wpl/bundles.hpp"
#include "wpl/quiver.hpp"

namespace wpl {

struct IdentityCheck {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct ExchangeStep {
  int vertex = 0;
  std::string outgoing;
  std::string incoming;
  std::vector<SequenceRecord> sequences;
  std::vector<IdentityCheck> checks;
};

struct SlopeEntry {
  std::string object;
  Rational slope;
  bool shifted = false;  // the summand is tau^-1 X[1] (or tau X[-1])
};

struct ReplayReport {
  WeightTriple weights{2, 2, 2};
  std::string start_fixture;
  std::string target_fixture;
  std::vector<int> sequence;
  Quiver initial;
  Quiver final_quiver;
  std::vector<std::string> initial_objects;
  std::vector<ExchangeStep> steps;
  std::vector<IdentityCheck> checks;
  std::vector<SequenceRecord> sequences;
  std::vector<SlopeEntry> slopes;
  std::optional<VertexMap> witness;
  std::vector<std::string> notes;

  // Every check passed, every sequence is additive, and the final quiver is
  // isomorphic to the target.
  bool pass() const;
};

// Re-evaluates a report: each check's pass flag agrees with lhs == rhs,
// sequences are additive, the final quiver is the initial one mutated along
// the sequence, and the witness is an isomorphism onto the target fixture.
bool Verify(const ReplayReport& report);

struct ConstructionReport {
  std::string title;
  int case_number = 0;
  std::vector<IdentityCheck> checks;
  std::vector<SequenceRecord> sequences;
  StableObject result;

  bool pass() const;
};

// The cone F_i of E -> E(xbar_i). Case 1 (both other weights 2): F_i = 0;
// case 2 (one of them 2): an extension bundle; case 3: a formal object of
// rank 3 with its projective cover and injective hull checked against the
// closed formulas. Throws PreconditionError for i outside 1..3.
ConstructionReport TwistTriangleCone(const Bundles& b, int i);

// G with 0 -> E<x - x_j - x_k>[1] -> G -> O(x) -> 0, the cone of
// E<x - x_j> + E<x - x_k> -> E<x>. Needs x - x_j - x_k >= 0, j != k.
StableObject PairTriangleCone(const Bundles& b,
                              const std::array<int, 3>& interior, int j,
                              int k);
// The closed form of E<x - x_j - x_k>[1]:
//   E<l_i x_i + (l_j - 1) x_j + (p_k - 1 - l_k) x_k>(l_k x_k).
ExtBundle PairTriangleSuspension(const Bundles& b,
                                 const std::array<int, 3>& interior, int j,
                                 int k);
// H with 0 -> E<x + x_j> -> H -> O(x + x_k) -> 0, the cone of
// E<x> -> E<x + x_j> + E<x + x_k>. Needs x + x_j + x_k in the box, j != k.
StableObject PairTriangleCocone(const Bundles& b,
                                const std::array<int, 3>& interior, int j,
                                int k);

ReplayReport Replay244();
ReplayReport Replay236();
ReplayReport Replay333();
// "244", "236" or "333". Throws PreconditionError otherwise.
ReplayReport RunReplay(const std::string& tag);

}  // namespace wpl

#endif  // WPL_REPLAY_HPP_

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

// The Hom-vanishing rules available without a general Hom calculus for the
// stable category:
//   * D(E, E(x)) != 0 iff x in {0, xbar_1, xbar_2, xbar_3}, and it is k for
//     x = xbar_i;
//   * Serre duality D(X, Y[1]) = D D(Y, X(w));
//   * for summands with slopes in a common window (a, alpha(a)],
//     D(X, Y[n]) = 0 whenever n is not 0 or 1.
// Anything these rules cannot decide is reported as kUnknown; the module
// never invents a dimension.

#ifndef WPL_STABLEHOM_HPP_
#define WPL_STABLEHOM_HPP_

#include <optional>
#include <string>
#include <vector>

#include "wpl/bundles.hpp"

namespace wpl {

enum class HomStatus { kVanishes, kNonzero, kUnknown };

std::string ToString(HomStatus s);

struct HomVerdict {
  HomStatus status = HomStatus::kUnknown;
  // Set only where the dimension is known (D(E, E(xbar_i)) = k).
  std::optional<int64_t> dim;
  std::string rule;
};

// True iff x is 0 or one of xbar_1, xbar_2, xbar_3.
bool HomEENonzero(const LGroup& g, const LElement& x);
// D(E, E(x)) with the dimension where it is known.
HomVerdict HomEE(const LGroup& g, const LElement& x);

// For F = E(u) and the Auslander bundle E(v): F + tau^{-1} E(v)[1] is
// extension-free iff D(F, E(v)(c - w)) = 0, i.e. iff v + c - w - u is not
// 0 or some xbar_i. The slope hypothesis mu F = mu(E(v)[1]) is the caller's.
bool AuslanderPairExtensionFree(const LGroup& g, const LElement& u,
                                const LElement& v);

enum class WindowVerdict { kVanishes, kUnknown };
// Both slopes are asserted by the caller to lie in (a, alpha(a)].
WindowVerdict WindowVanishing(const Rational& mu_x, const Rational& mu_y,
                              int n, const Rational& a);

// alpha^{-1}(0) for the genus-one types: -2 (2,4,4), -3 (2,3,6),
// -3/2 (3,3,3). Stored for reporting only.
Rational AlphaInverseOfZero(const WeightTriple& w);

// bundle[shift]
struct StableTerm {
  ExtBundle bundle;
  int shift = 0;

  bool operator==(const StableTerm&) const = default;
};

// D(source, target), or its k-dual when `dual` is set. Dimensions agree
// either way.
struct HomQuery {
  StableTerm source;
  StableTerm target;
  bool dual = false;

  bool operator==(const HomQuery&) const = default;
};

class HomCalculus {
 public:
  explicit HomCalculus(const Bundles& bundles) : b_(bundles) {}

  // Brings the shift into {0, 1} using X[2] = X(c).
  StableTerm NormalizeShift(const StableTerm& t) const;
  // Rewrites the term as E(u)[s] when its class allows (directly, or through
  // one suspension or desuspension). Returns nullopt otherwise.
  std::optional<StableTerm> AsAuslanderTerm(const StableTerm& t) const;

  // D(X, Y[n]) -> D D(Y[n-1], X(w)); lifts both sides by one shift first
  // when the target is unshifted. Terms of the result are shift-normalised.
  HomQuery SerreRewrite(const HomQuery& q) const;

  // Applies the rules until the query is D(E, E(x)) or no rule applies.
  // Each intermediate query is appended to `chain` when given.
  HomVerdict Decide(const HomQuery& q,
                    std::vector<std::string>* chain = nullptr) const;

  // D(X, Y[n]) for stable objects. Extension bundles go through Decide;
  // when `window_lower` is set the caller asserts both slopes lie in
  // (a, alpha(a)] and the window rule may apply.
  HomVerdict CheckExtension(const StableObject& x, const StableObject& y,
                            int n,
                            std::optional<Rational> window_lower = {}) const;

  std::string Format(const StableTerm& t) const;
  std::string Format(const HomQuery& q) const;

 private:
  const Bundles& b_;
};

struct ReplacementResult {
  bool tilting = false;
  ExtBundle min_summand;  // unique summand of minimal slope
  ExtBundle max_summand;  // unique summand of maximal slope
  HomVerdict verdict;     // for D(max, min(c - w))
  std::vector<std::string> chain;
};

// Whether tau^{-1} E[1] + (the cuboid object without E) is tilting, by
// checking D(T_max, T_min(c - w)) = 0 for its extremal-slope summands.
// Throws PreconditionError for triples that are not genus one and
// VerificationFailure when the rules cannot decide.
ReplacementResult ReplacementVerdict(const Bundles& bundles);

}  // namespace wpl

#endif  // WPL_STABLEHOM_HPP_

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

#include "wpl/stablehom.hpp"

#include <algorithm>

#include "wpl/error.hpp"

namespace wpl {

namespace {

bool IsAuslander(const StableTerm& t) {
  return t.bundle.interior == std::array<int, 3>{0, 0, 0};
}

HomVerdict Make(HomStatus s, std::string rule,
                std::optional<int64_t> dim = std::nullopt) {
  HomVerdict v;
  v.status = s;
  v.dim = dim;
  v.rule = std::move(rule);
  return v;
}

}  // namespace

std::string ToString(HomStatus s) {
  switch (s) {
    case HomStatus::kVanishes:
      return "vanishes";
    case HomStatus::kNonzero:
      return "nonzero";
    case HomStatus::kUnknown:
      return "unknown";
  }
  return "unknown";
}

bool HomEENonzero(const LGroup& g, const LElement& x) {
  if (x == g.Zero()) return true;
  for (int i = 1; i <= 3; ++i) {
    if (x == g.XBar(i)) return true;
  }
  return false;
}

HomVerdict HomEE(const LGroup& g, const LElement& x) {
  if (x == g.Zero()) {
    return Make(HomStatus::kNonzero, "D(E, E) contains the identity");
  }
  for (int i = 1; i <= 3; ++i) {
    if (x == g.XBar(i)) {
      return Make(HomStatus::kNonzero,
                  "D(E, E(xbar" + std::to_string(i) + ")) = k", 1);
    }
  }
  return Make(HomStatus::kVanishes,
              "D(E, E(x)) = 0 for x outside {0, xbar_1, xbar_2, xbar_3}");
}

bool AuslanderPairExtensionFree(const LGroup& g, const LElement& u,
                                const LElement& v) {
  const LElement x = g.Sub(g.Add(v, g.Sub(g.C(), g.Omega())), u);
  return !HomEENonzero(g, x);
}

WindowVerdict WindowVanishing(const Rational& mu_x, const Rational& mu_y,
                              int n, const Rational& a) {
  if (mu_x <= a || mu_y <= a) return WindowVerdict::kUnknown;
  if (n == 0 || n == 1) return WindowVerdict::kUnknown;
  return WindowVerdict::kVanishes;
}

Rational AlphaInverseOfZero(const WeightTriple& w) {
  std::array<int, 3> s = w.weights();
  std::sort(s.begin(), s.end());
  if (s == std::array<int, 3>{2, 4, 4}) return Rational(-2);
  if (s == std::array<int, 3>{2, 3, 6}) return Rational(-3);
  if (s == std::array<int, 3>{3, 3, 3}) return Rational(-3, 2);
  throw PreconditionError("no slope window for the non-tubular triple " +
                          w.ToString());
}

StableTerm HomCalculus::NormalizeShift(const StableTerm& t) const {
  const LGroup& g = b_.group();
  int s = t.shift % 2;
  if (s < 0) s += 2;
  const int64_t k = (t.shift - s) / 2;
  StableTerm out;
  out.bundle = b_.CanonicalForm(b_.Twist(t.bundle, g.C(k)));
  out.shift = s;
  return out;
}

std::optional<StableTerm> HomCalculus::AsAuslanderTerm(
    const StableTerm& t) const {
  auto auslander_in = [&](const ExtBundle& a) -> std::optional<ExtBundle> {
    for (const ExtBundle& p : b_.Orbit(a)) {
      if (p.interior == std::array<int, 3>{0, 0, 0}) return p;
    }
    return std::nullopt;
  };
  if (auto a = auslander_in(t.bundle)) {
    return NormalizeShift({*a, t.shift});
  }
  try {
    if (auto a = auslander_in(b_.Desuspend(t.bundle))) {
      return NormalizeShift({*a, t.shift + 1});
    }
    if (auto a = auslander_in(b_.Suspend(t.bundle))) {
      return NormalizeShift({*a, t.shift - 1});
    }
  } catch (const SearchFailure&) {
  }
  return std::nullopt;
}

HomQuery HomCalculus::SerreRewrite(const HomQuery& q) const {
  StableTerm x = q.source;
  StableTerm y = q.target;
  if (y.shift < 1) {
    x.shift += 1;
    y.shift += 1;
  }
  HomQuery out;
  out.dual = !q.dual;
  out.source = NormalizeShift({y.bundle, y.shift - 1});
  out.target = NormalizeShift({b_.Twist(x.bundle, b_.group().Omega()),
                               x.shift});
  return out;
}

HomVerdict HomCalculus::Decide(const HomQuery& start,
                               std::vector<std::string>* chain) const {
  const LGroup& g = b_.group();
  auto record = [&](const HomQuery& q) {
    if (chain == nullptr) return;
    std::string s = Format(q);
    if (chain->empty() || chain->back() != s) chain->push_back(std::move(s));
  };
  auto canon = [&](const StableTerm& t) {
    if (auto a = AsAuslanderTerm(t)) return *a;
    return NormalizeShift(t);
  };

  HomQuery q = start;
  record(q);
  q.source = canon(q.source);
  q.target = canon(q.target);
  record(q);
  for (int step = 0; step < 4; ++step) {
    const int d = q.target.shift - q.source.shift;
    if (d == 0) {
      if (!IsAuslander(q.source) || !IsAuslander(q.target)) {
        return Make(HomStatus::kUnknown,
                    "no rule for " + Format(q));
      }
      const LElement x =
          g.Sub(q.target.bundle.twist, q.source.bundle.twist);
      HomQuery fin{{b_.Auslander(), 0}, {b_.Auslander(x), 0}, q.dual};
      record(fin);
      return HomEE(g, x);
    }
    if (d == 1) {
      q = SerreRewrite(q);
    } else {
      q.source = NormalizeShift({q.source.bundle, q.source.shift + 1});
      q.target = NormalizeShift({q.target.bundle, q.target.shift + 1});
    }
    q.source = canon(q.source);
    q.target = canon(q.target);
    record(q);
  }
  return Make(HomStatus::kUnknown, "rewriting did not terminate");
}

HomVerdict HomCalculus::CheckExtension(
    const StableObject& x, const StableObject& y, int n,
    std::optional<Rational> window_lower) const {
  if (x.is_zero() || y.is_zero()) {
    return Make(HomStatus::kVanishes, "zero object");
  }
  const int total = n + y.shift() - x.shift();
  if (x.is_ext() && y.is_ext()) {
    HomVerdict v = Decide({{x.bundle(), 0}, {y.bundle(), total}});
    if (v.status != HomStatus::kUnknown) return v;
  }
  if (!window_lower) {
    return Make(HomStatus::kUnknown, "outside the Auslander-bundle rules");
  }
  auto slope = [&](const StableObject& o) {
    if (o.is_ext()) return b_.Slope(o.bundle());
    return Rational(b_.k0().DegOf(o.cls()), o.rank());
  };
  if (WindowVanishing(slope(x), slope(y), total, *window_lower) ==
      WindowVerdict::kVanishes) {
    return Make(HomStatus::kVanishes,
                "slopes in one window and shift " + std::to_string(total) +
                    " outside {0, 1}");
  }
  return Make(HomStatus::kUnknown, "window rule needs shift outside {0, 1}");
}

std::string HomCalculus::Format(const StableTerm& t) const {
  std::string s;
  if (IsAuslander(t)) {
    s = t.bundle.twist == LElement{}
            ? "E"
            : "E(" + LGroup::FormatExpr(t.bundle.twist) + ")";
  } else {
    s = Bundles::Format(t.bundle);
  }
  if (t.shift != 0) s += "[" + std::to_string(t.shift) + "]";
  return s;
}

std::string HomCalculus::Format(const HomQuery& q) const {
  std::string s = q.dual ? "D D(" : "D(";
  return s + Format(q.source) + ", " + Format(q.target) + ")";
}

ReplacementResult ReplacementVerdict(const Bundles& b) {
  const WeightTriple& w = b.weights();
  if (!w.is_genus_one()) {
    throw PreconditionError("the replacement check needs a tubular triple, got " +
                            w.ToString());
  }
  const LGroup& g = b.group();
  std::vector<ExtBundle> box;
  for (const LElement& x : g.Box()) box.push_back(b.Make(x, g.Zero()));
  auto by_slope = [&](const ExtBundle& l, const ExtBundle& r) {
    return b.Slope(l) < b.Slope(r);
  };
  const auto [lo, hi] = std::minmax_element(box.begin(), box.end(), by_slope);
  auto count = [&](const Rational& mu) {
    return std::count_if(box.begin(), box.end(), [&](const ExtBundle& e) {
      return b.Slope(e) == mu;
    });
  };
  if (count(b.Slope(*lo)) != 1 || count(b.Slope(*hi)) != 1) {
    throw VerificationFailure("extremal slopes of the box are not unique");
  }

  ReplacementResult r;
  r.min_summand = *lo;
  r.max_summand = *hi;
  HomCalculus calc(b);
  const LElement shift = g.Sub(g.C(), g.Omega());
  HomQuery q{{*hi, 0}, {b.Twist(*lo, shift), 0}, false};
  r.verdict = calc.Decide(q, &r.chain);
  if (r.verdict.status == HomStatus::kUnknown) {
    throw VerificationFailure("cannot decide " + calc.Format(q) + ": " +
                              r.verdict.rule);
  }
  r.tilting = r.verdict.status == HomStatus::kVanishes;
  return r;
}

}  // namespace wpl

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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wpl/bundles.hpp"
#include "wpl/fixtures.hpp"
#include "wpl/graded.hpp"
#include "wpl/k0.hpp"
#include "wpl/quiver.hpp"
#include "wpl/replay.hpp"
#include "wpl/stablehom.hpp"

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

std::vector<LElement> Sorted(std::vector<LElement> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Result of one criterion: whether it held and a short detail line.
struct Outcome {
  bool ok = true;
  std::string detail;
};

int64_t CountMonomials(const LGroup& g, const LElement& x) {
  const WeightTriple& w = g.weights();
  const int64_t d = g.Delta(x);
  if (d < 0) return 0;
  const int64_t p = w.lcm();
  int64_t n = 0;
  for (int64_t a3 = 0; a3 < w.weight(3); ++a3) {
    for (int64_t a2 = 0; a2 * (p / w.weight(2)) <= d; ++a2) {
      for (int64_t a1 = 0; a1 * (p / w.weight(1)) <= d; ++a1) {
        if (g.Normalize(a1, a2, a3, 0) == x) ++n;
      }
    }
  }
  return n;
}

Outcome GradedDimensions() {
  int checked = 0;
  int bad = 0;
  for (const WeightTriple& w : kTriples) {
    const LGroup g(w);
    for (const LElement& x : Window(g, 3)) {
      bad += DimS(x) != CountMonomials(g, x);
      ++checked;
    }
  }
  return {bad == 0, std::to_string(checked) + " degrees, " +
                        std::to_string(bad) + " mismatches"};
}

Outcome EulerConsistency() {
  int checked = 0;
  int bad = 0;
  for (const WeightTriple& w : kTriples) {
    const K0 k0(w);
    const LGroup& g = k0.group();
    for (const LElement& b : k0.basis()) {
      for (const LElement& y : Window(g, 3)) {
        const int64_t expected = HomDimLine(g, b, y) - Ext1DimLine(g, b, y);
        bad += k0.EulerForm(k0.ReduceLine(b), k0.ReduceLine(y)) != expected;
        ++checked;
      }
    }
  }
  return {bad == 0, std::to_string(checked) + " pairs, " +
                        std::to_string(bad) + " mismatches"};
}

Outcome PresentationRule() {
  long checked = 0;
  long bad = 0;
  for (const WeightTriple& w : kTriples) {
    const Bundles b(w);
    const auto zs = Window(b.group(), 2);
    for (const LElement& x : b.group().Box()) {
      const ExtBundle a = b.Make(x, {});
      const K0Class ca = b.ClassOf(a);
      for (const LElement& y : b.group().Box()) {
        for (const LElement& z : zs) {
          const ExtBundle c = b.Make(y, z);
          bad += b.EqExt(a, c) != (ca == b.ClassOf(c));
          ++checked;
        }
      }
    }
  }
  return {bad == 0, std::to_string(checked) + " pairs, " +
                        std::to_string(bad) + " discrepancies"};
}

Outcome HullsAndSuspension() {
  Outcome out;
  for (const WeightTriple& w : kTriples) {
    const Bundles b(w);
    const LGroup& g = b.group();
    if (Sorted(b.InjectiveHull(b.Auslander())) !=
        Sorted({g.Zero(), g.XBar(1), g.XBar(2), g.XBar(3)})) {
      out.ok = false;
      out.detail += "hull " + w.ToString() + "; ";
    }
    for (const LElement& x : g.Box()) {
      const ExtBundle e = b.Make(x, {});
      if (!b.EqExt(b.Desuspend(b.Suspend(e)), e)) {
        out.ok = false;
        out.detail += "round trip " + Bundles::Format(e) + "; ";
      }
    }
  }
  const Bundles b(WeightTriple(3, 3, 3));
  const LGroup& g = b.group();
  if (!b.EqExt(b.Suspend(b.Make({1, 0, 1})), b.Make({1, 1, 1}, g.X(2)))) {
    out.ok = false;
    out.detail += "suspend E<x1+x3>; ";
  }
  if (!b.EqExt(b.Suspend(b.Auslander()), b.Make({1, 1, 1}, g.Neg(g.Omega())))) {
    out.ok = false;
    out.detail += "suspend E; ";
  }
  if (out.ok) out.detail = "hulls, round trips and both suspensions exact";
  return out;
}

Outcome TorsionDeterminant() {
  Outcome out;
  int checked = 0;
  for (const WeightTriple& w : kTriples) {
    const Bundles b(w);
    const LGroup& g = b.group();
    const K0& k0 = b.k0();
    for (int i = 1; i <= 3; ++i) {
      const int j = i == 1 ? 2 : 1;
      const int k = 6 - i - j;
      // 0 -> E -> E(xbar_i) -> S -> 0
      const K0Class s = b.ClassOf(b.Auslander(g.XBar(i))) -
                        b.ClassOf(b.Auslander());
      std::array<int64_t, 3> a{0, 0, 0};
      a[static_cast<std::size_t>(j - 1)] = w.weight(j) - 2;
      a[static_cast<std::size_t>(k - 1)] = w.weight(k) - 2;
      const LElement closed = g.Normalize(a[0], a[1], a[2], 0);
      const LElement two_xbar = g.Scale(2, g.XBar(i));
      const bool ok = k0.RankOf(s) == 0 && k0.DetOf(s) == two_xbar &&
                      two_xbar == closed && TwistTriangleCone(b, i).pass();
      if (!ok) {
        out.ok = false;
        out.detail += w.ToString() + " i=" + std::to_string(i) + "; ";
      }
      ++checked;
    }
  }
  if (out.ok) out.detail = std::to_string(checked) + " cases exact";
  return out;
}

Outcome Dichotomy() {
  Outcome out;
  for (const WeightTriple& w : {WeightTriple(2, 4, 4), WeightTriple(2, 3, 6)}) {
    const ReplacementResult r = ReplacementVerdict(Bundles(w));
    if (!r.tilting || r.verdict.status != HomStatus::kVanishes) {
      out.ok = false;
      out.detail += w.ToString() + " not tilting; ";
    }
  }
  const ReplacementResult r = ReplacementVerdict(Bundles(WeightTriple(3, 3, 3)));
  const bool witness = !r.chain.empty() && r.chain.back() == "D D(E, E)" &&
                       r.verdict.status == HomStatus::kNonzero;
  if (r.tilting || !witness) {
    out.ok = false;
    out.detail += "(3,3,3) verdict; ";
  }
  if (out.ok) {
    out.detail = "(2,4,4) and (2,3,6) tilting, (3,3,3) not: " + r.chain.back();
  }
  return out;
}

Outcome Replays() {
  Outcome out;
  const std::pair<const char*, std::size_t> runs[] = {
      {"244", 9}, {"236", 10}, {"333", 8}};
  for (const auto& [tag, vertices] : runs) {
    const auto start = std::chrono::steady_clock::now();
    const ReplayReport r = RunReplay(tag);
    const bool ok = r.pass() && Verify(r) &&
                    FindIsomorphism(r.final_quiver, GetFixture(r.target_fixture))
                        .has_value() &&
                    r.final_quiver.size() == vertices;
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s %s %.2fs; ", tag, ok ? "ok" : "FAILED",
                  secs);
    out.detail += buf;
    out.ok = out.ok && ok && secs < 10.0;
  }
  return out;
}

Outcome Searches() {
  Outcome out;
  const struct {
    const char* source;
    const char* target;
    int depth;
  } runs[] = {{"cuboid_cluster_244", "target_tubular_244", 5},
              {"cuboid_cluster_236", "target_tubular_236", 7},
              {"tbar_cluster_333", "target_tubular_333", 3}};
  for (const auto& run : runs) {
    const Quiver src = GetFixture(run.source);
    const Quiver dst = GetFixture(run.target);
    const SearchResult r = SearchMutations(src, dst, run.depth);
    const bool ok = r.sequence.has_value() &&
                    static_cast<int>(r.sequence->size()) <= run.depth &&
                    FindIsomorphism(src.ApplySequence(*r.sequence), dst)
                        .has_value();
    out.ok = out.ok && ok;
    out.detail += std::string(run.target) + " length " +
                  (r.sequence ? std::to_string(r.sequence->size()) : "none") +
                  "; ";
  }
  return out;
}

Outcome BranchIndependence() {
  const Bundles b(WeightTriple(3, 3, 3));
  const LGroup& g = b.group();
  std::vector<K0Class> sums;
  for (int i = 1; i <= 3; ++i) {
    const int j = i == 1 ? 2 : 1;
    const int k = 6 - i - j;
    const StableObject f = PairTriangleCone(b, {1, 1, 1}, j, k);
    sums.push_back(f.cls() + b.ClassOf(b.Make({1, 1, 1}, g.X(i))));
  }
  const bool ok = sums[0] == sums[1] && sums[1] == sums[2];
  return {ok, "class " + b.k0().Format(sums[0])};
}

Quiver RandomQuiver(std::mt19937& rng, int n, int max_mult) {
  std::uniform_int_distribution<int> entry(-max_mult, max_mult);
  std::vector<Vertex> v;
  for (int i = 1; i <= n; ++i) v.push_back({i, "v" + std::to_string(i), {}, {}});
  std::vector<Arrow> arrows;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int b = entry(rng);
      if (b > 0) arrows.push_back({i, j, b});
      if (b < 0) arrows.push_back({j, i, -b});
    }
  }
  return Quiver(v, arrows);
}

Outcome MutationCrossCheck() {
  int checked = 0;
  int bad = 0;
  for (const std::string& name : FixtureNames()) {
    const Quiver q = GetFixture(name);
    for (int id : q.ids()) {
      const Quiver m = q.Mutate(id);
      bad += !(m == MutateByRewriting(q, id)) || !(m.Mutate(id) == q);
      ++checked;
    }
  }
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> size(1, 7);
  for (int n = 0; n < 1000; ++n) {
    const int k = size(rng);
    const Quiver q = RandomQuiver(rng, k, 3);
    const int v = std::uniform_int_distribution<int>(1, k)(rng);
    const Quiver m = q.Mutate(v);
    bad += !(m == MutateByRewriting(q, v)) || !(m.Mutate(v) == q);
    ++checked;
  }
  return {bad == 0, std::to_string(checked) + " mutations, " +
                        std::to_string(bad) + " mismatches"};
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;  // 0 for no limit
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace wpl

int main() {
  using namespace wpl;
  const Criterion criteria[] = {
      {1, "graded dimension closed form vs monomial count", 1.0, GradedDimensions},
      {2, "K0 reduction Euler consistency", 5.0, EulerConsistency},
      {3, "presentation rule vs class equality", 60.0, PresentationRule},
      {4, "hulls and suspension", 0.0, HullsAndSuspension},
      {5, "torsion determinant 2 xbar_i", 0.0, TorsionDeterminant},
      {6, "replacement dichotomy", 0.0, Dichotomy},
      {7, "replays reach the tubular targets", 0.0, Replays},
      {8, "independent mutation search", 120.0, Searches},
      {9, "branch independence of the shifted cone class", 0.0,
       BranchIndependence},
      {10, "mutation engine cross-check", 0.0, MutationCrossCheck},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.ok = false;
      o.detail += " (over time limit)";
    }
    failures += !o.ok;
    std::printf("%s AC%d %s [%.2fs] %s\n", o.ok ? "PASS" : "FAIL", c.number,
                c.name, secs, o.detail.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}

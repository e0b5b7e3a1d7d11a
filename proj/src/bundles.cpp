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

#include <algorithm>
#include <sstream>

#include "wpl/error.hpp"

namespace wpl {

std::string FormatRational(const Rational& q) {
  std::ostringstream os;
  os << q.numerator();
  if (q.denominator() != 1) os << '/' << q.denominator();
  return os.str();
}

StableObject StableObject::Zero() { return StableObject(); }

StableObject StableObject::Ext(const ExtBundle& bundle) {
  StableObject o;
  o.kind_ = Kind::kExt;
  o.bundle_ = bundle;
  o.rank_ = 2;
  return o;
}

StableObject StableObject::Formal(const K0& k0, std::string name, K0Class cls,
                                  int64_t rank, int shift,
                                  std::vector<SequenceRecord> provenance) {
  if (k0.RankOf(cls) != rank) {
    throw PreconditionError("formal object " + name + ": class has rank " +
                            std::to_string(k0.RankOf(cls)) + ", expected " +
                            std::to_string(rank));
  }
  StableObject o;
  o.kind_ = Kind::kFormal;
  o.name_ = std::move(name);
  o.cls_ = std::move(cls);
  o.rank_ = rank;
  o.shift_ = shift;
  o.provenance_ = std::move(provenance);
  return o;
}

const ExtBundle& StableObject::bundle() const {
  if (kind_ != Kind::kExt) {
    throw PreconditionError("stable object is not an extension bundle");
  }
  return bundle_;
}

bool StableObject::operator==(const StableObject& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::kZero:
      return true;
    case Kind::kExt:
      return bundle_ == other.bundle_;
    case Kind::kFormal:
      return cls_ == other.cls_ && rank_ == other.rank_ &&
             shift_ == other.shift_;
  }
  return false;
}

Bundles::Bundles(WeightTriple weights) : k0_(weights) {}

bool Bundles::InBox(const std::array<int, 3>& interior) const {
  for (int i = 1; i <= 3; ++i) {
    const int l = interior[static_cast<std::size_t>(i - 1)];
    if (l < 0 || l > weights().weight(i) - 2) return false;
  }
  return true;
}

ExtBundle Bundles::Make(const std::array<int, 3>& interior,
                        const LElement& twist) const {
  if (!InBox(interior)) {
    std::ostringstream os;
    os << "interior vector <" << interior[0] << ',' << interior[1] << ','
       << interior[2] << "> is outside 0 <= x <= 2w+c for "
       << weights().ToString();
    throw PreconditionError(os.str());
  }
  return ExtBundle{interior, twist};
}

ExtBundle Bundles::Make(std::initializer_list<int> interior,
                        const LElement& twist) const {
  if (interior.size() != 3) {
    throw PreconditionError("interior vector needs three entries");
  }
  std::array<int, 3> v{};
  std::copy(interior.begin(), interior.end(), v.begin());
  return Make(v, twist);
}

ExtBundle Bundles::Make(const LElement& x, const LElement& twist) const {
  if (x.c != 0) {
    throw PreconditionError("interior element " + LGroup::Format(x) +
                            " is outside 0 <= x <= 2w+c");
  }
  return Make(x.l, twist);
}

ExtBundle Bundles::Auslander(const LElement& twist) const {
  return ExtBundle{{0, 0, 0}, twist};
}

LElement Bundles::InteriorElement(const ExtBundle& a) const {
  return group().Normalize(a.interior[0], a.interior[1], a.interior[2], 0);
}

K0Class Bundles::ExtensionClass(const LElement& x, const LElement& z) const {
  const LGroup& g = group();
  return k0_.ReduceLine(g.Add(z, g.Omega())) + k0_.ReduceLine(g.Add(z, x));
}

K0Class Bundles::ClassOf(const ExtBundle& a) const {
  return ExtensionClass(InteriorElement(a), a.twist);
}

LElement Bundles::DetOf(const ExtBundle& a) const {
  const LGroup& g = group();
  return g.Add(g.Add(g.Scale(2, a.twist), InteriorElement(a)), g.Omega());
}

std::vector<ExtBundle> Bundles::Orbit(const ExtBundle& a) const {
  const LGroup& g = group();
  std::vector<ExtBundle> out{a};
  for (int j = 0; j < 3; ++j) {
    ExtBundle b;
    std::array<int64_t, 3> shift{0, 0, 0};
    for (int i = 0; i < 3; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (i == j) {
        b.interior[ui] = a.interior[ui];
      } else {
        b.interior[ui] = weights().weights()[ui] - 2 - a.interior[ui];
        shift[ui] = a.interior[ui] + 1;
      }
    }
    b.twist = g.Add(a.twist, g.Normalize(shift[0], shift[1], shift[2], -1));
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Bundles::EqExt(const ExtBundle& a, const ExtBundle& b) const {
  const auto orbit = Orbit(a);
  return std::binary_search(orbit.begin(), orbit.end(), b);
}

ExtBundle Bundles::CanonicalForm(const ExtBundle& a) const {
  return Orbit(a).front();
}

ExtBundle Bundles::Twist(const ExtBundle& a, const LElement& z) const {
  return ExtBundle{a.interior, group().Add(a.twist, z)};
}

std::vector<LElement> Bundles::InjectiveHull(const ExtBundle& a) const {
  const LGroup& g = group();
  std::vector<LElement> out{g.Add(a.twist, InteriorElement(a))};
  const LElement base = g.Add(a.twist, g.Omega());
  for (int i = 1; i <= 3; ++i) {
    out.push_back(
        g.Add(base, g.X(i, a.interior[static_cast<std::size_t>(i - 1)] + 1)));
  }
  return out;
}

std::vector<LElement> Bundles::ProjectiveCover(const ExtBundle& a) const {
  const LGroup& g = group();
  std::vector<LElement> out{g.Add(a.twist, g.Omega())};
  const LElement top = g.Add(a.twist, InteriorElement(a));
  for (int i = 1; i <= 3; ++i) {
    out.push_back(
        g.Sub(top, g.X(i, a.interior[static_cast<std::size_t>(i - 1)] + 1)));
  }
  return out;
}

std::vector<ExtBundle> Bundles::MatchClass(const K0Class& cls,
                                           const LElement& center) const {
  const LGroup& g = group();
  const LElement det = k0_.DetOf(cls);
  const auto& p = weights().weights();
  std::vector<ExtBundle> hits;
  for (const LElement& x : g.Box()) {
    for (int a = 0; a < p[0]; ++a) {
      for (int b = 0; b < p[1]; ++b) {
        for (int d = 0; d < p[2]; ++d) {
          for (int l = -kSearchRadius; l <= kSearchRadius; ++l) {
            ExtBundle cand{x.l, g.Add(center, g.Normalize(a, b, d, l))};
            if (DetOf(cand) != det) continue;
            if (ClassOf(cand) == cls) hits.push_back(CanonicalForm(cand));
          }
        }
      }
    }
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  return hits;
}

namespace {

ExtBundle UniqueHit(const std::vector<ExtBundle>& hits, const char* what,
                    const ExtBundle& a) {
  if (hits.size() != 1) {
    throw SearchFailure(std::string(what) + " of " + Bundles::Format(a) +
                        ": " + std::to_string(hits.size()) +
                        " non-equivalent presentations match the class");
  }
  return hits.front();
}

}  // namespace

ExtBundle Bundles::Suspend(const ExtBundle& a) const {
  const K0Class target = k0_.SumLines(InjectiveHull(a)) - ClassOf(a);
  return UniqueHit(MatchClass(target, a.twist), "suspension", a);
}

ExtBundle Bundles::Desuspend(const ExtBundle& a) const {
  const K0Class target = k0_.SumLines(ProjectiveCover(a)) - ClassOf(a);
  return UniqueHit(MatchClass(target, a.twist), "desuspension", a);
}

StableObject Bundles::TwistObject(const StableObject& a,
                                  const LElement& z) const {
  switch (a.kind()) {
    case StableObject::Kind::kZero:
      return a;
    case StableObject::Kind::kExt:
      return StableObject::Ext(Twist(a.bundle(), z));
    case StableObject::Kind::kFormal: {
      StableObject out = a;
      out.cls_ = k0_.Twist(a.cls(), z);
      return out;
    }
  }
  return a;
}

StableObject Bundles::Tau(const StableObject& a) const {
  return TwistObject(a, group().Omega());
}

StableObject Bundles::TauInv(const StableObject& a) const {
  return TwistObject(a, group().Neg(group().Omega()));
}

K0Class Bundles::ClassOf(const StableObject& a) const {
  switch (a.kind()) {
    case StableObject::Kind::kZero:
      return k0_.Zero();
    case StableObject::Kind::kExt:
      return ClassOf(a.bundle());
    case StableObject::Kind::kFormal:
      return a.cls();
  }
  return k0_.Zero();
}

Rational Bundles::Slope(const ExtBundle& a) const {
  return Rational(group().Delta(DetOf(a)), 2);
}

Rational Bundles::Slope(const StableObject& a) const {
  if (a.is_zero() || a.rank() == 0) {
    throw PreconditionError("slope of a rank-zero object is undefined");
  }
  if (a.is_formal() && a.shift() != 0) {
    throw PreconditionError("slope of the shifted object " + Describe(a) +
                            " is not computable from its class");
  }
  return Rational(k0_.DegOf(ClassOf(a)), a.rank());
}

std::string Bundles::Format(const ExtBundle& a) {
  std::ostringstream os;
  os << "E<" << a.interior[0] << ',' << a.interior[1] << ',' << a.interior[2]
     << ">(" << LGroup::FormatExpr(a.twist) << ')';
  return os.str();
}

std::string Bundles::Describe(const StableObject& a) const {
  switch (a.kind()) {
    case StableObject::Kind::kZero:
      return "0";
    case StableObject::Kind::kExt:
      return Format(a.bundle());
    case StableObject::Kind::kFormal: {
      std::string s = a.name();
      if (a.shift() != 0) s += "[" + std::to_string(a.shift()) + "]";
      return s;
    }
  }
  return {};
}

}  // namespace wpl

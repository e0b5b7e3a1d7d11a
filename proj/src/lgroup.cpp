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

#include "wpl/lgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wpl/error.hpp"

namespace wpl {

namespace {

// Floor division for a possibly negative numerator and positive divisor.
std::pair<int64_t, int64_t> FloorDivMod(int64_t a, int64_t p) {
  int64_t q = a / p;
  int64_t r = a % p;
  if (r < 0) {
    r += p;
    --q;
  }
  return {q, r};
}

}  // namespace

WeightTriple::WeightTriple(int p1, int p2, int p3) : p_{p1, p2, p3} {
  for (int p : p_) {
    if (p < 2) {
      throw PreconditionError("weights must be >= 2, got " + ToString());
    }
  }
  lcm_ = std::lcm(std::lcm<int64_t>(p1, p2), p3);
}

WeightTriple WeightTriple::Parse(const std::string& text) {
  std::array<int, 3> p{};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t used = 0;
    try {
      p[static_cast<std::size_t>(i)] = std::stoi(text.substr(pos), &used);
    } catch (const std::exception&) {
      throw ParseError("expected three weights \"p1,p2,p3\", got \"" + text +
                       "\"");
    }
    pos += used;
    if (i < 2) {
      if (pos >= text.size() || text[pos] != ',') {
        throw ParseError("expected three weights \"p1,p2,p3\", got \"" +
                         text + "\"");
      }
      ++pos;
    }
  }
  if (pos != text.size()) {
    throw ParseError("trailing characters in weights \"" + text + "\"");
  }
  return WeightTriple(p[0], p[1], p[2]);
}

bool WeightTriple::is_genus_one() const {
  std::array<int, 3> s = p_;
  std::sort(s.begin(), s.end());
  return s == std::array<int, 3>{2, 4, 4} || s == std::array<int, 3>{2, 3, 6} ||
         s == std::array<int, 3>{3, 3, 3};
}

std::string WeightTriple::ToString() const {
  std::ostringstream os;
  os << '(' << p_[0] << ',' << p_[1] << ',' << p_[2] << ')';
  return os.str();
}

std::string WeightTriple::Tag() const {
  std::ostringstream os;
  os << p_[0] << p_[1] << p_[2];
  return os.str();
}

LElement LGroup::Normalize(int64_t a1, int64_t a2, int64_t a3,
                           int64_t a) const {
  LElement out;
  const std::array<int64_t, 3> raw{a1, a2, a3};
  out.c = a;
  for (std::size_t i = 0; i < 3; ++i) {
    auto [q, r] = FloorDivMod(raw[i], w_.weights()[i]);
    out.l[i] = static_cast<int>(r);
    out.c += q;
  }
  return out;
}

LElement LGroup::X(int i, int64_t k) const {
  std::array<int64_t, 3> a{0, 0, 0};
  a[static_cast<std::size_t>(i - 1)] = k;
  return Normalize(a[0], a[1], a[2], 0);
}

LElement LGroup::Omega() const { return Normalize(-1, -1, -1, 1); }

LElement LGroup::XBar(int i) const { return Add(X(i), Omega()); }

SpecialElements LGroup::Specials() const {
  SpecialElements s;
  s.c = C();
  s.omega = Omega();
  for (int i = 1; i <= 3; ++i) s.xbar[static_cast<std::size_t>(i - 1)] = XBar(i);
  s.top = Add(Scale(2, s.omega), s.c);
  return s;
}

LElement LGroup::Add(const LElement& a, const LElement& b) const {
  return Normalize(a.l[0] + b.l[0], a.l[1] + b.l[1], a.l[2] + b.l[2],
                   a.c + b.c);
}

LElement LGroup::Neg(const LElement& a) const {
  return Normalize(-a.l[0], -a.l[1], -a.l[2], -a.c);
}

LElement LGroup::Sub(const LElement& a, const LElement& b) const {
  return Add(a, Neg(b));
}

LElement LGroup::Scale(int64_t k, const LElement& a) const {
  return Normalize(k * a.l[0], k * a.l[1], k * a.l[2], k * a.c);
}

bool LGroup::Leq(const LElement& a, const LElement& b) const {
  return Sub(b, a).is_effective();
}

int64_t LGroup::Delta(const LElement& a) const {
  const int64_t p = w_.lcm();
  int64_t d = a.c * p;
  for (std::size_t i = 0; i < 3; ++i) {
    d += a.l[i] * (p / w_.weights()[i]);
  }
  return d;
}

std::vector<LElement> LGroup::BoxPoints(const LElement& lo,
                                        const LElement& hi) const {
  const LElement span = Sub(hi, lo);
  if (span.c != 0) {
    throw UnsupportedInterval("interval [" + Format(lo) + ", " + Format(hi) +
                              "] is not box-shaped");
  }
  std::vector<LElement> out;
  out.reserve(static_cast<std::size_t>((span.l[0] + 1) * (span.l[1] + 1) *
                                       (span.l[2] + 1)));
  for (int a = 0; a <= span.l[0]; ++a) {
    for (int b = 0; b <= span.l[1]; ++b) {
      for (int d = 0; d <= span.l[2]; ++d) {
        out.push_back(Add(lo, Normalize(a, b, d, 0)));
      }
    }
  }
  return out;
}

std::vector<LElement> LGroup::Box() const {
  return BoxPoints(Zero(), Specials().top);
}

std::string LGroup::Format(const LElement& a) {
  std::ostringstream os;
  os << '(' << a.l[0] << ',' << a.l[1] << ',' << a.l[2] << ';' << a.c << ')';
  return os.str();
}

std::string LGroup::FormatExpr(const LElement& a) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](int64_t k, const char* atom) {
    if (k == 0) return;
    if (k < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    const int64_t m = k < 0 ? -k : k;
    if (m != 1) os << m;
    os << atom;
    first = false;
  };
  term(a.l[0], "x1");
  term(a.l[1], "x2");
  term(a.l[2], "x3");
  term(a.c, "c");
  if (first) os << '0';
  return os.str();
}

}  // namespace wpl

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

#include "wpl/textio.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "wpl/error.hpp"

namespace wpl {

namespace {

class Scanner {
 public:
  explicit Scanner(const std::string& text) : s_(text) {}

  void SkipSpace() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }
  bool AtEnd() {
    SkipSpace();
    return pos_ >= s_.size();
  }
  char Peek() {
    SkipSpace();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool Accept(char ch) {
    if (Peek() != ch) return false;
    ++pos_;
    return true;
  }
  void Expect(char ch) {
    if (!Accept(ch)) Fail(std::string("expected '") + ch + "'");
  }
  std::optional<int64_t> Integer() {
    SkipSpace();
    std::size_t end = pos_;
    while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) {
      ++end;
    }
    if (end == pos_) return std::nullopt;
    if (end - pos_ > 12) Fail("integer too large");
    const int64_t v = std::stoll(s_.substr(pos_, end - pos_));
    pos_ = end;
    return v;
  }
  int64_t SignedInteger() {
    const bool neg = Accept('-');
    const auto v = Integer();
    if (!v) Fail("expected an integer");
    return neg ? -*v : *v;
  }
  std::string Word() {
    SkipSpace();
    std::size_t end = pos_;
    while (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) {
      ++end;
    }
    std::string w = s_.substr(pos_, end - pos_);
    pos_ = end;
    return w;
  }
  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }
  const std::string& text() const { return s_; }

  [[noreturn]] void Fail(const std::string& what) const {
    std::ostringstream os;
    os << what << " at position " << pos_ << " in \"" << s_ << '"';
    throw ParseError(os.str());
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

std::optional<LElement> Atom(const LGroup& g, const std::string& w) {
  if (w == "x1") return g.X(1);
  if (w == "x2") return g.X(2);
  if (w == "x3") return g.X(3);
  if (w == "c") return g.C();
  if (w == "w" || w == "omega") return g.Omega();
  if (w == "xbar1") return g.XBar(1);
  if (w == "xbar2") return g.XBar(2);
  if (w == "xbar3") return g.XBar(3);
  return std::nullopt;
}

LElement NormalFormTuple(const LGroup& g, Scanner& sc) {
  sc.Expect('(');
  std::array<int64_t, 3> l{};
  for (std::size_t i = 0; i < 3; ++i) {
    l[i] = sc.SignedInteger();
    if (i < 2) sc.Expect(',');
  }
  sc.Expect(';');
  const int64_t c = sc.SignedInteger();
  sc.Expect(')');
  return g.Normalize(l[0], l[1], l[2], c);
}

// Stops at the first character that cannot continue a sum.
LElement Sum(const LGroup& g, Scanner& sc) {
  LElement total = g.Zero();
  bool first = true;
  while (true) {
    int64_t sign = 1;
    if (sc.Accept('-')) {
      sign = -1;
    } else if (!sc.Accept('+') && !first) {
      break;
    }
    const auto k = sc.Integer();
    sc.Accept('*');
    const std::size_t before = sc.pos();
    const std::string w = sc.Word();
    LElement term;
    if (w.empty()) {
      if (!k) sc.Fail("expected a term");
      term = g.C(*k);
    } else {
      const auto atom = Atom(g, w);
      if (!atom) {
        sc.set_pos(before);
        sc.Fail("unknown symbol \"" + w + "\"");
      }
      term = g.Scale(k.value_or(1), *atom);
    }
    total = g.Add(total, g.Scale(sign, term));
    first = false;
  }
  return total;
}

LElement Element(const LGroup& g, Scanner& sc) {
  if (sc.Peek() == '(') {
    // Either a tuple or a parenthesised sum.
    const std::size_t start = sc.pos();
    try {
      return NormalFormTuple(g, sc);
    } catch (const ParseError&) {
      sc.set_pos(start);
    }
    sc.Expect('(');
    const LElement inner = Sum(g, sc);
    sc.Expect(')');
    return inner;
  }
  return Sum(g, sc);
}

}  // namespace

LElement ParseElement(const LGroup& g, const std::string& text) {
  Scanner sc(text);
  if (sc.AtEnd()) sc.Fail("empty expression");
  if (text.find(';') != std::string::npos) {
    const LElement e = NormalFormTuple(g, sc);
    if (!sc.AtEnd()) sc.Fail("trailing characters");
    return e;
  }
  const LElement e = Sum(g, sc);
  if (!sc.AtEnd()) sc.Fail("trailing characters");
  return e;
}

ExtBundle ParseBundle(const Bundles& b, const std::string& text) {
  const LGroup& g = b.group();
  Scanner sc(text);
  if (sc.Word() != "E") sc.Fail("a bundle starts with \"E\"");
  std::optional<std::array<int, 3>> vec;
  std::optional<LElement> x;
  if (sc.Accept('<')) {
    const std::size_t start = sc.pos();
    std::array<int, 3> v{};
    bool is_vec = true;
    for (std::size_t i = 0; i < 3 && is_vec; ++i) {
      const auto k = sc.Integer();
      if (!k || (i < 2 && !sc.Accept(','))) is_vec = false;
      if (k) v[i] = static_cast<int>(*k);
    }
    if (is_vec && sc.Peek() == '>') {
      vec = v;
    } else {
      sc.set_pos(start);
      x = Sum(g, sc);
    }
    sc.Expect('>');
  }
  LElement z = g.Zero();
  if (sc.Accept('(')) {
    z = Element(g, sc);
    sc.Expect(')');
  }
  if (!sc.AtEnd()) sc.Fail("trailing characters");
  if (vec) return b.Make(*vec, z);
  if (x) return b.Make(*x, z);
  return b.Auslander(z);
}

std::vector<int> ParseIntList(const std::string& text) {
  Scanner sc(text);
  std::vector<int> out;
  while (!sc.AtEnd()) {
    out.push_back(static_cast<int>(sc.SignedInteger()));
    if (!sc.Accept(',') && !sc.AtEnd() && !std::isdigit(static_cast<unsigned char>(sc.Peek())) && sc.Peek() != '-') {
      sc.Fail("expected ','");
    }
  }
  return out;
}

}  // namespace wpl

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

#include "wpl/k0.hpp"

#include <sstream>

#include "wpl/error.hpp"
#include "wpl/graded.hpp"

namespace wpl {

K0Class& K0Class::operator+=(const K0Class& other) {
  if (coeffs_.empty()) coeffs_.assign(other.size(), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other[i];
  return *this;
}

K0Class& K0Class::operator-=(const K0Class& other) {
  if (coeffs_.empty()) coeffs_.assign(other.size(), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other[i];
  return *this;
}

K0Class operator*(int64_t k, K0Class a) {
  for (auto& v : a.coeffs_) v *= k;
  return a;
}

K0Class K0Class::operator-() const { return -1 * *this; }

K0::K0(WeightTriple weights) : g_(weights) {
  basis_.push_back(g_.Zero());
  for (int i = 1; i <= 3; ++i) {
    offset_[static_cast<std::size_t>(i - 1)] = basis_.size();
    for (int l = 1; l < weights.weight(i); ++l) basis_.push_back(g_.X(i, l));
  }
  basis_.push_back(g_.C());

  const std::size_t n = basis_.size();
  gram_.resize(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      gram_[r * n + s] = HomDimLine(g_, basis_[r], basis_[s]) -
                         Ext1DimLine(g_, basis_[r], basis_[s]);
    }
  }
}

std::size_t K0::IndexOfMultiple(int i, int l) const {
  if (l == 0) return 0;
  return offset_[static_cast<std::size_t>(i - 1)] + static_cast<std::size_t>(l - 1);
}

K0Class K0::Unit(std::size_t index) const {
  K0Class out = Zero();
  std::vector<int64_t> v = out.coefficients();
  v.at(index) = 1;
  return K0Class(std::move(v));
}

K0Class K0::ReduceLine(const LElement& y) const {
  std::vector<int64_t> v(basis_.size(), 0);
  for (int i = 1; i <= 3; ++i) {
    v[IndexOfMultiple(i, y.l[static_cast<std::size_t>(i - 1)])] += 1;
  }
  v[0] -= 2 + y.c;
  v.back() += y.c;
  return K0Class(std::move(v));
}

K0Class K0::SumLines(const std::vector<LElement>& ys) const {
  K0Class out = Zero();
  for (const auto& y : ys) out += ReduceLine(y);
  return out;
}

int64_t K0::EulerForm(const K0Class& a, const K0Class& b) const {
  const std::size_t n = basis_.size();
  int64_t total = 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (a[r] == 0) continue;
    for (std::size_t s = 0; s < n; ++s) {
      total += a[r] * b[s] * gram_[r * n + s];
    }
  }
  return total;
}

int64_t K0::RankOf(const K0Class& a) const {
  int64_t r = 0;
  for (auto v : a.coefficients()) r += v;
  return r;
}

LElement K0::DetOf(const K0Class& a) const {
  LElement d = g_.Zero();
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    if (a[r] != 0) d = g_.Add(d, g_.Scale(a[r], basis_[r]));
  }
  return d;
}

int64_t K0::DegOf(const K0Class& a) const { return g_.Delta(DetOf(a)); }

K0Class K0::Twist(const K0Class& a, const LElement& z) const {
  K0Class out = Zero();
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    if (a[r] != 0) out += a[r] * ReduceLine(g_.Add(basis_[r], z));
  }
  return out;
}

K0Class K0::TorsionClass(int i, int64_t j, int64_t len) const {
  if (len <= 0) {
    throw PreconditionError("torsion length must be positive");
  }
  return ReduceLine(g_.X(i, j)) - ReduceLine(g_.X(i, j - len));
}

std::string K0::Format(const K0Class& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const int64_t k = a[r];
    if (k == 0) continue;
    if (k < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    const int64_t m = k < 0 ? -k : k;
    if (m != 1) os << m;
    os << "[O(" << LGroup::FormatExpr(basis_[r]) << ")]";
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace wpl

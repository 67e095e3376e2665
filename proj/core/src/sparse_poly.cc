// Copyright 2026 The Polymat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polymat/sparse_poly.h"

#include <algorithm>
#include <sstream>

#include "polymat/error.h"

namespace polymat {
namespace {

Integer Factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

SparsePoly SparsePoly::Constant(int nvars, const Rational& c) {
  SparsePoly f(nvars);
  f.AddTerm(Exponent(nvars, 0), c);
  return f;
}

SparsePoly SparsePoly::Monomial(Exponent exp, const Rational& c) {
  SparsePoly f(static_cast<int>(exp.size()));
  f.AddTerm(exp, c);
  return f;
}

int SparsePoly::degree() const {
  int d = -1;
  for (const auto& [exp, c] : terms_) d = std::max(d, CoordinateSum(exp));
  return d;
}

Rational SparsePoly::coefficient(std::span<const int> exp) const {
  auto it = terms_.find(Exponent(exp.begin(), exp.end()));
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::AddTerm(const Exponent& exp, const Rational& c) {
  if (static_cast<int>(exp.size()) != nvars_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "exponent " + PointToString(exp) + " does not have " +
                    std::to_string(nvars_) + " entries",
                PointToString(exp));
  }
  if (std::any_of(exp.begin(), exp.end(), [](int e) { return e < 0; })) {
    throw Error(ErrorCode::kNegativeExponent,
                "negative exponent " + PointToString(exp), PointToString(exp));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SparsePoly::CheckSameVars(const SparsePoly& other) const {
  if (other.nvars_ != nvars_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "polynomials in " + std::to_string(nvars_) + " and " +
                    std::to_string(other.nvars_) + " variables");
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  CheckSameVars(other);
  for (const auto& [exp, c] : other.terms_) AddTerm(exp, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  CheckSameVars(other);
  for (const auto& [exp, c] : other.terms_) AddTerm(exp, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exp, coeff] : terms_) coeff *= c;
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly f = *this;
  for (auto& [exp, c] : f.terms_) c = -c;
  return f;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.CheckSameVars(b);
  SparsePoly out(a.nvars());
  Exponent sum(a.nvars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (int i = 0; i < a.nvars(); ++i) sum[i] = ea[i] + eb[i];
      out.AddTerm(sum, ca * cb);
    }
  }
  return out;
}

Rational Evaluate(const SparsePoly& f, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != f.nvars()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "evaluation point has " + std::to_string(point.size()) +
                    " coordinates, expected " + std::to_string(f.nvars()));
  }
  Rational value = 0;
  for (const auto& [exp, c] : f.terms()) {
    Rational term = c;
    for (int i = 0; i < f.nvars(); ++i) {
      for (int k = 0; k < exp[i]; ++k) term *= point[i];
    }
    value += term;
  }
  return value;
}

SparsePoly Twist(const SparsePoly& f, std::span<const int> m) {
  if (static_cast<int>(m.size()) != f.nvars()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "twist vector has the wrong length", PointToString(m));
  }
  SparsePoly out(f.nvars());
  for (const auto& [exp, c] : f.terms()) {
    Exponent twisted(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) twisted[i] = m[i] - exp[i];
    out.AddTerm(twisted, c);
  }
  return out;
}

SparsePoly Homogenize(const SparsePoly& f) {
  if (f.is_zero()) {
    throw Error(ErrorCode::kZeroPolynomial, "cannot homogenize 0");
  }
  const int d = f.degree();
  SparsePoly out(f.nvars() + 1);
  for (const auto& [exp, c] : f.terms()) {
    Exponent h;
    h.reserve(exp.size() + 1);
    h.push_back(d - CoordinateSum(exp));
    h.insert(h.end(), exp.begin(), exp.end());
    out.AddTerm(h, c);
  }
  return out;
}

SparsePoly PartialDerivative(const SparsePoly& f, int var) {
  if (var < 0 || var >= f.nvars()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "variable index " + std::to_string(var) + " out of range");
  }
  SparsePoly out(f.nvars());
  for (const auto& [exp, c] : f.terms()) {
    if (exp[var] == 0) continue;
    Exponent d = exp;
    --d[var];
    out.AddTerm(d, c * exp[var]);
  }
  return out;
}

SparsePoly Normalize(const SparsePoly& f) {
  SparsePoly out(f.nvars());
  for (const auto& [exp, c] : f.terms()) {
    Integer denom = 1;
    for (int e : exp) denom *= Factorial(e);
    out.AddTerm(exp, c / Rational(denom));
  }
  return out;
}

PointSet Support(const SparsePoly& f) {
  std::vector<LatticePoint> points;
  points.reserve(f.size());
  for (const auto& [exp, c] : f.terms()) points.push_back(exp);
  return PointSet(f.nvars(), std::move(points));
}

bool IsHomogeneous(const SparsePoly& f) {
  const int d = f.degree();
  return std::all_of(f.terms().begin(), f.terms().end(), [d](const auto& t) {
    return CoordinateSum(t.first) == d;
  });
}

SparsePoly HomogeneousPart(const SparsePoly& f, int d) {
  SparsePoly out(f.nvars());
  for (const auto& [exp, c] : f.terms()) {
    if (CoordinateSum(exp) == d) out.AddTerm(exp, c);
  }
  return out;
}

bool HasIntegerCoefficients(const SparsePoly& f) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [](const auto& t) { return IsInteger(t.second); });
}

std::string FormatMonomial(std::span<const int> exp, const std::string& prefix,
                           int first_index) {
  std::string out;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += prefix + std::to_string(static_cast<int>(i) + first_index);
    if (exp[i] > 1) out += "^" + std::to_string(exp[i]);
  }
  return out.empty() ? "1" : out;
}

std::string FormatPoly(const SparsePoly& f, const std::string& prefix,
                       int first_index) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exp, c] : f.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool constant =
        std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
    if (constant) {
      out << RationalToString(magnitude);
    } else {
      if (magnitude != 1) out << RationalToString(magnitude) << '*';
      out << FormatMonomial(exp, prefix, first_index);
    }
  }
  return out.str();
}

}  // namespace polymat

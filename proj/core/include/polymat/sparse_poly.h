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

#ifndef POLYMAT_SPARSE_POLY_H_
#define POLYMAT_SPARSE_POLY_H_

#include <functional>
#include <map>
#include <span>
#include <string>

#include "polymat/point_set.h"
#include "polymat/rational.h"

namespace polymat {

using Exponent = LatticePoint;

// Sparse polynomial in `nvars` variables with exact rational coefficients.
// Terms are keyed by nonnegative exponent vectors in descending
// lexicographic order; zero coefficients are never stored.
class SparsePoly {
 public:
  using TermMap = std::map<Exponent, Rational, std::greater<>>;

  explicit SparsePoly(int nvars) : nvars_(nvars) {}

  static SparsePoly Constant(int nvars, const Rational& c);
  static SparsePoly Monomial(Exponent exp, const Rational& c = 1);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Maximum total degree; -1 for the zero polynomial.
  int degree() const;

  Rational coefficient(std::span<const int> exp) const;

  // Adds c * t^exp in place. Throws DimensionMismatch or NegativeExponent.
  void AddTerm(const Exponent& exp, const Rational& c);

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const Rational& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) {
    return a += b;
  }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) {
    return a -= b;
  }
  friend SparsePoly operator*(SparsePoly a, const Rational& c) {
    return a *= c;
  }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) {
    return a *= c;
  }
  SparsePoly operator-() const;

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  void CheckSameVars(const SparsePoly& other) const;

  int nvars_;
  TermMap terms_;
};

Rational Evaluate(const SparsePoly& f, std::span<const Rational> point);

// c t^n  ->  c t^(m - n). Throws NegativeExponent when some n_i > m_i.
SparsePoly Twist(const SparsePoly& f, std::span<const int> m);

// t_0^deg(f) f(t_1/t_0, ..., t_p/t_0); the new variable is placed first.
// Throws ZeroPolynomial.
SparsePoly Homogenize(const SparsePoly& f);

SparsePoly PartialDerivative(const SparsePoly& f, int var);

// c t^n  ->  (c / n!) t^n with n! = n_1! ... n_p!.
SparsePoly Normalize(const SparsePoly& f);

PointSet Support(const SparsePoly& f);

bool IsHomogeneous(const SparsePoly& f);

// Terms of total degree `d`.
SparsePoly HomogeneousPart(const SparsePoly& f, int d);

bool HasIntegerCoefficients(const SparsePoly& f);

// Human-readable form, e.g. "t1^2*t2 - 2*t1*t2 + t3". Variable k is named
// prefix + (k + first_index).
std::string FormatPoly(const SparsePoly& f, const std::string& prefix = "t",
                       int first_index = 1);

// Single monomial with the same naming rules, e.g. "x1^2*x3" or "1".
std::string FormatMonomial(std::span<const int> exp,
                           const std::string& prefix = "x",
                           int first_index = 1);

}  // namespace polymat

#endif  // POLYMAT_SPARSE_POLY_H_

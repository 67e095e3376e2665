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

#include <gtest/gtest.h>

#include <random>

#include "polymat/error.h"

namespace polymat {
namespace {

SparsePoly T(int nvars, LatticePoint exp, Rational c = 1) {
  SparsePoly f(nvars);
  f.AddTerm(exp, c);
  return f;
}

// t1 + t2 - 1.
SparsePoly U12Cave() { return T(2, {1, 0}) + T(2, {0, 1}) - T(2, {0, 0}); }

// The printed cave polynomial of the worked example's dual.
SparsePoly DualCave() {
  SparsePoly f(3);
  for (LatticePoint n : {LatticePoint{2, 1, 0}, {2, 0, 1}, {1, 2, 0},
                         {1, 1, 1}, {1, 0, 2}, {0, 2, 1}, {0, 1, 2},
                         {0, 0, 3}}) {
    f.AddTerm(n, 1);
  }
  f.AddTerm({2, 0, 0}, -1);
  f.AddTerm({1, 1, 0}, -2);
  f.AddTerm({0, 2, 0}, -1);
  f.AddTerm({1, 0, 1}, -2);
  f.AddTerm({0, 1, 1}, -2);
  f.AddTerm({0, 0, 2}, -2);
  f.AddTerm({1, 0, 0}, 1);
  f.AddTerm({0, 1, 0}, 1);
  f.AddTerm({0, 0, 1}, 1);
  return f;
}

TEST(SparsePolyTest, Arithmetic) {
  EXPECT_EQ((T(2, {1, 0}) + T(2, {0, 1})) + (-T(2, {1, 0})), T(2, {0, 1}));
  EXPECT_TRUE((T(2, {1, 1}) * Rational(0)).is_zero());
  EXPECT_EQ((T(2, {1, 0}) - T(2, {0, 0})) + T(2, {0, 1}), U12Cave());
  EXPECT_EQ(T(2, {1, 0}) * T(2, {0, 1}), T(2, {1, 1}));
  EXPECT_EQ(SparsePoly::Monomial({0, 3}, 2).coefficient(std::vector<int>{0, 3}),
            2);
  EXPECT_EQ(U12Cave().degree(), 1);
  EXPECT_EQ(SparsePoly(2).degree(), -1);
  EXPECT_THROW(T(2, {1, 0}) + T(3, {1, 0, 0}), Error);
  EXPECT_THROW(T(2, {1}), Error);
  EXPECT_THROW(T(2, {-1, 0}), Error);
}

TEST(SparsePolyTest, TermsCancel) {
  SparsePoly f = U12Cave();
  f.AddTerm({1, 0}, -1);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.coefficient(std::vector<int>{1, 0}), 0);
}

TEST(EvaluateTest, Examples) {
  const std::vector<Rational> ones(3, Rational(1));
  EXPECT_EQ(Evaluate(DualCave(), ones), 1);
  const std::vector<Rational> zero(2, Rational(0));
  EXPECT_EQ(Evaluate(U12Cave(), zero), -1);
  const std::vector<Rational> point{Rational(1, 2), Rational(2)};
  EXPECT_EQ(Evaluate(T(2, {1, 1}), point), 1);
  EXPECT_THROW(Evaluate(U12Cave(), ones), Error);
}

TEST(TwistTest, Examples) {
  const LatticePoint m{1, 1};
  EXPECT_EQ(Twist(U12Cave(), m), T(2, {0, 1}) + T(2, {1, 0}) - T(2, {1, 1}));
  EXPECT_EQ(Twist(SparsePoly::Constant(2, 1), m), T(2, {1, 1}));
  const LatticePoint cage{2, 2, 4};
  EXPECT_EQ(Twist(Twist(DualCave(), cage), cage), DualCave());
  EXPECT_THROW(Twist(T(2, {2, 0}), m), Error);
}

TEST(HomogenizeTest, Examples) {
  EXPECT_EQ(Homogenize(U12Cave()),
            T(3, {0, 1, 0}) + T(3, {0, 0, 1}) - T(3, {1, 0, 0}));
  EXPECT_EQ(Homogenize(T(2, {1, 1})), T(3, {0, 1, 1}));
  const SparsePoly h = Homogenize(DualCave());
  EXPECT_TRUE(IsHomogeneous(h));
  EXPECT_EQ(h.degree(), 3);
  EXPECT_EQ(h.coefficient(std::vector<int>{0, 1, 1, 1}), 1);
  EXPECT_EQ(h.coefficient(std::vector<int>{1, 1, 1, 0}), -2);
  EXPECT_EQ(h.coefficient(std::vector<int>{2, 0, 0, 1}), 1);
  EXPECT_THROW(Homogenize(SparsePoly(2)), Error);
}

TEST(DerivativeTest, Examples) {
  EXPECT_EQ(PartialDerivative(T(2, {3, 1}, 2), 0), T(2, {2, 1}, 6));
  EXPECT_TRUE(PartialDerivative(T(2, {3, 0}), 1).is_zero());
  EXPECT_EQ(Normalize(T(1, {2})), T(1, {2}, Rational(1, 2)));
  EXPECT_EQ(Normalize(T(2, {1, 1})), T(2, {1, 1}));
  // 2 / (3! 1!).
  EXPECT_EQ(Normalize(T(2, {3, 1}, 2)), T(2, {3, 1}, Rational(1, 3)));
}

TEST(SupportTest, Examples) {
  EXPECT_EQ(Support(U12Cave()), PointSet(2, {{1, 0}, {0, 1}, {0, 0}}));
  EXPECT_TRUE(Support(SparsePoly(2)).empty());
  EXPECT_EQ(Support(DualCave()).size(), 17u);
}

TEST(FormatTest, Typography) {
  EXPECT_EQ(FormatPoly(U12Cave()), "t1 + t2 - 1");
  EXPECT_EQ(FormatPoly(SparsePoly(2)), "0");
  EXPECT_EQ(FormatPoly(T(3, {2, 1, 0}, Rational(-1, 2)) + T(3, {0, 0, 1}, 3)),
            "-1/2*t1^2*t2 + 3*t3");
  EXPECT_EQ(FormatPoly(Homogenize(U12Cave()), "t", 0), "-t0 + t1 + t2");
  EXPECT_EQ(FormatMonomial(std::vector<int>{2, 0, 3}, "x", 1), "x1^2*x3^3");
  EXPECT_EQ(FormatMonomial(std::vector<int>{0, 0}, "x", 1), "1");
}

TEST(IntegerTest, Detection) {
  EXPECT_TRUE(HasIntegerCoefficients(DualCave()));
  EXPECT_FALSE(HasIntegerCoefficients(Normalize(T(1, {2}))));
  EXPECT_EQ(HomogeneousPart(DualCave(), 1),
            T(3, {1, 0, 0}) + T(3, {0, 1, 0}) + T(3, {0, 0, 1}));
}

SparsePoly RandomPoly(std::mt19937& rng, int nvars) {
  std::uniform_int_distribution<int> exponent(0, 2), coeff(-3, 3), den(1, 3),
      terms(0, 5);
  SparsePoly f(nvars);
  const int count = terms(rng);
  for (int k = 0; k < count; ++k) {
    LatticePoint n(nvars);
    for (int& x : n) x = exponent(rng);
    f.AddTerm(n, Rational(coeff(rng), den(rng)));
  }
  return f;
}

TEST(SparsePolyPropertyTest, RingLaws) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const SparsePoly f = RandomPoly(rng, 3), g = RandomPoly(rng, 3),
                     h = RandomPoly(rng, 3);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_TRUE((f - f).is_zero());
    const LatticePoint m{2, 2, 2};
    EXPECT_EQ(Twist(Twist(f, m), m), f);
  }
}

Integer Factorial(int n) {
  Integer r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

TEST(SparsePolyPropertyTest, HomogenizeAndNormalize) {
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const SparsePoly f = RandomPoly(rng, 3);
    if (f.is_zero()) continue;
    const SparsePoly h = Homogenize(f);
    EXPECT_TRUE(IsHomogeneous(h));
    EXPECT_EQ(h.degree(), f.degree());
    std::vector<Rational> v(3), w{Rational(1)};
    for (auto& x : v) x = Rational(num(rng), den(rng));
    w.insert(w.end(), v.begin(), v.end());
    EXPECT_EQ(Evaluate(h, w), Evaluate(f, v));

    SparsePoly back(3);
    const SparsePoly normalized = Normalize(f);
    for (const auto& [exp, c] : normalized.terms()) {
      Integer scale = 1;
      for (int e : exp) scale *= Factorial(e);
      back.AddTerm(exp, c * Rational(scale));
    }
    EXPECT_EQ(back, f);
  }
}

}  // namespace
}  // namespace polymat

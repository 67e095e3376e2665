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

#include "polymat/syzygy.h"

#include <gtest/gtest.h>

#include <random>

#include "polymat/error.h"
#include "polymat/fixtures.h"
#include "polymat/invariants.h"
#include "test_support.h"

namespace polymat {
namespace {

SparsePoly T(int nvars, LatticePoint exp, Rational c = 1) {
  SparsePoly f(nvars);
  f.AddTerm(exp, c);
  return f;
}

// The printed 17-term K-polynomial of the worked example.
SparsePoly ExampleK() {
  SparsePoly k(3);
  for (LatticePoint n :
       {LatticePoint{2, 2, 3}, {2, 1, 4}, {1, 2, 4}}) {
    k.AddTerm(n, 1);
  }
  for (LatticePoint n :
       {LatticePoint{2, 2, 2}, {2, 1, 3}, {1, 2, 3}, {1, 1, 4}}) {
    k.AddTerm(n, -2);
  }
  k.AddTerm({2, 0, 4}, -1);
  k.AddTerm({0, 2, 4}, -1);
  for (LatticePoint n : {LatticePoint{0, 2, 3}, {2, 0, 3}, {1, 2, 2},
                         {2, 1, 2}, {2, 2, 1}, {1, 1, 3}, {1, 0, 4},
                         {0, 1, 4}}) {
    k.AddTerm(n, 1);
  }
  return k;
}

TEST(MonomialIdealTest, Minimalizes) {
  const MonomialIdeal I(2, {{1, 1}, {1, 0}, {2, 0}, {0, 3}});
  EXPECT_EQ(I.generators(), PointSet(2, {{1, 0}, {0, 3}}));
  EXPECT_TRUE(I.Contains(std::vector<int>{1, 5}));
  EXPECT_FALSE(I.Contains(std::vector<int>{0, 2}));
  EXPECT_TRUE(MonomialIdeal(2, {}).is_zero());
  EXPECT_EQ(FormatIdeal(I), "x2^3\nx1\n");
}

TEST(PolymatroidalIdealTest, Examples) {
  EXPECT_EQ(PolymatroidalIdeal(LoadFixture("paper-example")).generators(),
            PointSet(3, {{0, 2, 3}, {2, 0, 3}, {1, 2, 2}, {2, 1, 2},
                         {2, 2, 1}, {1, 1, 3}, {1, 0, 4}, {0, 1, 4}}));
  EXPECT_EQ(PolymatroidalIdeal(LoadFixture("rank-zero")).generators(),
            PointSet(2, {{0, 0}}));
  EXPECT_EQ(PolymatroidalIdeal(LoadFixture("u12")).generators(),
            PointSet(2, {{1, 0}, {0, 1}}));
}

TEST(BettiTest, TwoVariables) {
  const BettiTable betti = ComputeBettiTable(MonomialIdeal(2, {{1, 0}, {0, 1}}));
  EXPECT_EQ(betti.entries().size(), 3u);
  EXPECT_EQ(betti.at(0, {1, 0}), 1);
  EXPECT_EQ(betti.at(0, {0, 1}), 1);
  EXPECT_EQ(betti.at(1, {1, 1}), 1);
  EXPECT_EQ(betti.ProjectiveDimension(), 1);
  EXPECT_EQ(betti.AlternatingSum(), 1);
  EXPECT_EQ(KPolynomialFromBetti(betti),
            T(2, {1, 0}) + T(2, {0, 1}) - T(2, {1, 1}));
}

TEST(BettiTest, PrincipalAndUnitIdeals) {
  const BettiTable principal = ComputeBettiTable(MonomialIdeal(2, {{1, 0}}));
  EXPECT_EQ(principal.entries().size(), 1u);
  EXPECT_EQ(principal.at(0, {1, 0}), 1);
  EXPECT_EQ(KPolynomialFromBetti(principal), T(2, {1, 0}));
  const BettiTable unit = ComputeBettiTable(MonomialIdeal(2, {{0, 0}}));
  EXPECT_EQ(KPolynomialFromBetti(unit), SparsePoly::Constant(2, 1));
  EXPECT_THROW(ComputeBettiTable(MonomialIdeal(2, {})), Error);
}

TEST(BettiTest, NonLinearResolution) {
  // (x1^2, x2): the syzygy sits in degree (2,1).
  const BettiTable betti = ComputeBettiTable(MonomialIdeal(2, {{2, 0}, {0, 1}}));
  EXPECT_EQ(betti.at(1, {2, 1}), 1);
  // (x1 x2, x2 x3, x1 x3): two first syzygies, no second.
  const BettiTable triangle = ComputeBettiTable(
      MonomialIdeal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
  EXPECT_EQ(triangle.at(1, {1, 1, 1}), 2);
  EXPECT_EQ(triangle.ProjectiveDimension(), 1);
}

TEST(BettiTest, WorkedExample) {
  const Polymatroid P = LoadFixture("paper-example");
  const BettiTable betti = ComputeBettiTable(PolymatroidalIdeal(P));
  EXPECT_EQ(betti.at(1, {2, 2, 2}), 2);
  EXPECT_EQ(betti.ProjectiveDimension(), 2);
  EXPECT_EQ(KPolynomialFromBetti(betti), ExampleK());
  EXPECT_EQ(ComputeBettiTable(PolymatroidalIdeal(P), 4), betti);
}

TEST(KPolynomialTest, FromCave) {
  const Polymatroid u12 = LoadFixture("u12");
  EXPECT_EQ(KPolynomialFromCave(u12, std::vector<int>{1, 1}),
            T(2, {1, 0}) + T(2, {0, 1}) - T(2, {1, 1}));
  const Polymatroid P = LoadFixture("paper-example");
  EXPECT_EQ(KPolynomialFromCave(P, P.cage()), ExampleK());
  EXPECT_EQ(KPolynomialFromCave(P, std::vector<int>{3, 2, 5}), ExampleK());
  EXPECT_EQ(KPolynomialFromCave(LoadFixture("rank-zero"),
                                std::vector<int>{2, 1}),
            SparsePoly::Constant(2, 1));
  EXPECT_THROW(KPolynomialFromCave(P, std::vector<int>{1, 2, 4}), Error);
}

TEST(HsIdealTest, WorkedExample) {
  const Polymatroid P = LoadFixture("paper-example");
  EXPECT_EQ(HsIdeal(P, P.cage(), 0), PolymatroidalIdeal(P));
  EXPECT_EQ(HsIdeal(P, P.cage(), 1).generators(),
            PointSet(3, {{2, 2, 2}, {2, 1, 3}, {1, 2, 3}, {2, 0, 4},
                         {1, 1, 4}, {0, 2, 4}}));
  const BettiTable betti = ComputeBettiTable(PolymatroidalIdeal(P));
  EXPECT_EQ(HsFromBetti(betti, 2).generators(),
            PointSet(3, {{2, 2, 3}, {2, 1, 4}, {1, 2, 4}}));
  EXPECT_EQ(HsIdeal(P, P.cage(), 2), HsFromBetti(betti, 2));
  EXPECT_TRUE(HsIdeal(P, P.cage(), 3).is_zero());
  EXPECT_TRUE(HsFromBetti(betti, 3).is_zero());
  EXPECT_EQ(HsFromBetti(betti, 0), PolymatroidalIdeal(P));
  EXPECT_THROW(HsIdeal(P, P.cage(), -1), Error);
}

TEST(HsIdealTest, U12) {
  const Polymatroid u12 = LoadFixture("u12");
  const MonomialIdeal expected(2, {{1, 1}});
  EXPECT_EQ(HsIdeal(u12, u12.cage(), 1), expected);
  EXPECT_EQ(HsFromBetti(ComputeBettiTable(PolymatroidalIdeal(u12)), 1),
            expected);
}

TEST(SyzygyPropertyTest, TwoRoutesAndHilbertSeries) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Polymatroid P =
        trial % 2 == 0
            ? testing::RandomPolymatroid(rng, 1 + trial % 3, 2, 2, 2)
            : testing::RandomGraphicRestriction(rng, 2 + trial % 3, 4, 5);
    const MonomialIdeal I = PolymatroidalIdeal(P);
    const BettiTable betti = ComputeBettiTable(I, 1 + trial % 3);
    const SparsePoly k = KPolynomialFromBetti(betti);
    EXPECT_EQ(k, testing::KPolynomialByHilbertSeries(P.p(),
                                                     I.generators().points()));
    for (const LatticePoint& m : {P.cage(), testing::RandomCage(rng, P, 2)}) {
      EXPECT_EQ(KPolynomialFromCave(P, m), k) << "cage " << PointToString(m);
    }
    EXPECT_EQ(betti.AlternatingSum(), 1);
    for (const auto& [key, beta] : betti.entries()) {
      EXPECT_EQ(CoordinateSum(key.second), P.total_rank() + key.first);
      EXPECT_EQ(Rational(key.first % 2 == 0 ? beta : -beta),
                k.coefficient(key.second));
    }
    for (int i = 0; i <= betti.ProjectiveDimension() + 1; ++i) {
      const MonomialIdeal hs = HsIdeal(P, P.cage(), i);
      EXPECT_EQ(hs, HsFromBetti(betti, i)) << "index " << i;
      if (!hs.is_zero()) {
        EXPECT_TRUE(IsMConvex(hs.generators()));
      }
    }
    testing::ForEachBoxPoint(P.cage(), [&](const LatticePoint& n) {
      EXPECT_EQ(DominatesBase(P, n) == 1, I.Contains(n));
    });
  }
}

}  // namespace
}  // namespace polymat

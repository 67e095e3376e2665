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

#include "polymat/valuative.h"

#include <gtest/gtest.h>

#include <random>

#include "polymat/error.h"
#include "polymat/fixtures.h"
#include "polymat/invariants.h"
#include "test_support.h"

namespace polymat {
namespace {

const PointSet kDualPoints(3, {{2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {0, 1, 2},
                               {0, 0, 3}, {1, 1, 1}, {1, 2, 0}, {2, 1, 0}});
const PointSet kU12(2, {{1, 0}, {0, 1}});

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kMalformedInput;
}

TEST(HyperplaneSplitTest, DualExample) {
  const Split split = HyperplaneSplit(kDualPoints, 0b100, 1);
  EXPECT_EQ(split.lower, PointSet(3, {{2, 0, 1}, {0, 2, 1}, {1, 1, 1},
                                      {1, 2, 0}, {2, 1, 0}}));
  EXPECT_EQ(split.upper, PointSet(3, {{2, 0, 1}, {0, 2, 1}, {1, 0, 2},
                                      {0, 1, 2}, {0, 0, 3}, {1, 1, 1}}));
  EXPECT_EQ(split.middle, PointSet(3, {{2, 0, 1}, {0, 2, 1}, {1, 1, 1}}));
  EXPECT_TRUE(IsMConvex(split.lower));
  EXPECT_TRUE(IsMConvex(split.upper));
  EXPECT_TRUE(IsMConvex(split.middle));
}

TEST(HyperplaneSplitTest, DegenerateButValid) {
  const Split split = HyperplaneSplit(kU12, 0b01, 0);
  EXPECT_EQ(split.lower, PointSet(2, {{0, 1}}));
  EXPECT_EQ(split.upper, kU12);
  EXPECT_EQ(split.middle, PointSet(2, {{0, 1}}));
}

TEST(HyperplaneSplitTest, Errors) {
  EXPECT_EQ(CodeOf([] { HyperplaneSplit(kDualPoints, 0b100, -1); }),
            ErrorCode::kEmptyPiece);
  EXPECT_EQ(CodeOf([] { HyperplaneSplit(kDualPoints, 0b100, 4); }),
            ErrorCode::kEmptyPiece);
  EXPECT_EQ(CodeOf([] { HyperplaneSplit(kDualPoints, 0, 1); }),
            ErrorCode::kInvalidParameter);
  EXPECT_EQ(CodeOf([] { HyperplaneSplit(kDualPoints, 0b1000, 1); }),
            ErrorCode::kInvalidParameter);
  EXPECT_EQ(CodeOf([] { HyperplaneSplit(PointSet(2, {{2, 0}, {0, 2}}), 1, 1); }),
            ErrorCode::kNotMConvex);
  // Spanning trees of K4 with at most one of the edges 1, 2.
  const PointSet k4 = BasePoints(LoadFixture("graphic-k4"));
  try {
    HyperplaneSplit(k4, 0b000011, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotMConvex);
    EXPECT_EQ(e.witness(), "lower");
  }
}

TEST(CheckRelationTest, Examples) {
  EXPECT_TRUE(CheckRelation(Relation{{{1, kU12}, {-1, kU12}}}).holds);
  const Split split = HyperplaneSplit(kDualPoints, 0b100, 1);
  EXPECT_TRUE(CheckRelation(SplitRelation(kDualPoints, split)).holds);

  const RelationCheck bad = CheckRelation(
      Relation{{{1, PointSet(2, {{1, 0}})}, {-1, PointSet(2, {{0, 1}})}}});
  EXPECT_FALSE(bad.holds);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_EQ(*bad.witness, (std::vector<Rational>{1, 0}));
}

TEST(CheckRelationTest, GridCatchesRelationsThatOnlyHoldOnLattice) {
  // Holds at every lattice point, but the open segment between the two
  // vertices belongs to the first polytope only.
  const RelationCheck check = CheckRelation(Relation{
      {{1, kU12}, {-1, PointSet(2, {{1, 0}})}, {-1, PointSet(2, {{0, 1}})}}});
  EXPECT_FALSE(check.holds);
  ASSERT_TRUE(check.witness.has_value());
  EXPECT_FALSE(IsInteger((*check.witness)[0]));
}

TEST(ValuativeCheckTest, Examples) {
  const ValuativeResult trivial =
      ValuativeCheck(Relation{{{1, kDualPoints}, {-1, kDualPoints}}});
  EXPECT_TRUE(trivial.vanishes);
  EXPECT_TRUE(trivial.residual.is_zero());

  const Relation relation =
      SplitRelation(kDualPoints, HyperplaneSplit(kDualPoints, 0b100, 1));
  EXPECT_TRUE(ValuativeCheck(relation).vanishes);
  EXPECT_TRUE(MobiusResidual(relation).is_zero());

  // Oracle: the four cave polynomials from the closed-form Moebius values.
  SparsePoly residual(3);
  for (const auto& [a, piece] : relation.terms) {
    residual += testing::MobiusGeneratingPolynomial(RankFromPoints(piece)) *
                Rational(a);
  }
  EXPECT_TRUE(residual.is_zero());

  EXPECT_EQ(CodeOf([] {
              ValuativeCheck(Relation{{{1, PointSet(2, {{1, 0}})},
                                       {-1, PointSet(2, {{0, 1}})}}});
            }),
            ErrorCode::kRelationInvalid);
}

TEST(ProperSplitsTest, ListsOnlyUsableCuts) {
  const auto splits = ProperSplits(kDualPoints);
  EXPECT_FALSE(splits.empty());
  bool found = false;
  for (const auto& [J, c] : splits) {
    found = found || (J == 0b100 && c == 1);
    EXPECT_NO_THROW(HyperplaneSplit(kDualPoints, J, c));
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(ProperSplits(kU12).empty());
  std::mt19937_64 rng(3);
  EXPECT_FALSE(RandomSplit(kU12, rng).has_value());
  const auto choice = RandomSplit(kDualPoints, rng);
  ASSERT_TRUE(choice.has_value());
  EXPECT_NE(std::find_if(splits.begin(), splits.end(),
                         [&](const SplitChoice& s) {
                           return s.subset == choice->subset &&
                                  s.threshold == choice->threshold;
                         }),
            splits.end());
}

TEST(ValuativePropertyTest, EverySplitOfRandomPolymatroids) {
  std::mt19937 rng(51);
  int relations = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Polymatroid P = testing::RandomPolymatroid(rng, 2 + trial % 2, 2, 2, 3);
    const PointSet base = BasePoints(P);
    for (const auto& [J, c] : ProperSplits(base)) {
      const Relation relation = SplitRelation(base, HyperplaneSplit(base, J, c));
      const RelationCheck check = CheckRelation(relation);
      EXPECT_TRUE(check.holds) << check.reason;
      EXPECT_TRUE(ValuativeCheck(relation).vanishes);
      EXPECT_TRUE(MobiusResidual(relation).is_zero());
      ++relations;
    }
  }
  EXPECT_GT(relations, 10);
}

}  // namespace
}  // namespace polymat

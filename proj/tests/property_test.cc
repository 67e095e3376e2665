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

// Cross-module invariants on every corpus fixture.

#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>

#include "polymat/fixtures.h"
#include "polymat/invariants.h"
#include "polymat/lorentzian.h"
#include "polymat/syzygy.h"
#include "polymat/valuative.h"
#include "test_support.h"

namespace polymat {
namespace {

class CorpusTest : public ::testing::TestWithParam<std::string> {
 protected:
  Polymatroid P = LoadFixture(GetParam());
};

TEST_P(CorpusTest, CaveMatchesMobiusOracle) {
  const SparsePoly cave = Cave(P);
  EXPECT_EQ(cave, testing::MobiusGeneratingPolynomial(P));
  EXPECT_TRUE(IsGeneralizedPolymatroid(cave));
  for (const auto& [exp, c] : cave.terms()) {
    for (int e : exp) EXPECT_GE(e, 0);
  }
}

TEST_P(CorpusTest, KPolynomialRoutesAgreeForSeveralCages) {
  const BettiTable betti = ComputeBettiTable(PolymatroidalIdeal(P));
  const SparsePoly k = KPolynomialFromBetti(betti);
  LatticePoint loose = P.cage();
  for (int& m : loose) ++m;
  for (const LatticePoint& m :
       {P.cage(), testing::SingletonRanks(P), loose}) {
    EXPECT_EQ(KPolynomialFromCave(P, m), k) << PointToString(m);
  }
  EXPECT_EQ(betti.AlternatingSum(), 1);
}

TEST_P(CorpusTest, ShiftIdealsAgreeAndAreMConvex) {
  const BettiTable betti = ComputeBettiTable(PolymatroidalIdeal(P));
  EXPECT_EQ(HsIdeal(P, P.cage(), 0), PolymatroidalIdeal(P));
  for (int i = 0; i <= betti.ProjectiveDimension(); ++i) {
    const MonomialIdeal hs = HsIdeal(P, P.cage(), i);
    EXPECT_EQ(hs, HsFromBetti(betti, i)) << "index " << i;
    EXPECT_TRUE(IsMConvex(hs.generators())) << "index " << i;
  }
}

TEST_P(CorpusTest, SplitsAreValuative) {
  const PointSet base = BasePoints(P);
  for (const auto& [J, c] : ProperSplits(base)) {
    const Relation relation = SplitRelation(base, HyperplaneSplit(base, J, c));
    EXPECT_TRUE(CheckRelation(relation).holds);
    EXPECT_TRUE(ValuativeCheck(relation).vanishes);
    EXPECT_TRUE(MobiusResidual(relation).is_zero());
  }
}

TEST_P(CorpusTest, ParallelResultsMatchSerial) {
  const MonomialIdeal I = PolymatroidalIdeal(P);
  EXPECT_EQ(ComputeBettiTable(I, 3), ComputeBettiTable(I, 1));
  const SparsePoly h = Homogenize(SignChange(Cave(Dual(P))));
  const LorentzianVerdict serial = IsDenormalizedLorentzian(h, 1);
  const LorentzianVerdict parallel = IsDenormalizedLorentzian(h, 3);
  EXPECT_EQ(serial.lorentzian, parallel.lorentzian);
  EXPECT_EQ(serial.diagnostic, parallel.diagnostic);
}

std::string TestName(const ::testing::TestParamInfo<std::string>& info) {
  std::string name;
  for (char c : info.param) {
    name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  }
  return name + "_" + std::to_string(info.index);
}

INSTANTIATE_TEST_SUITE_P(Fixtures, CorpusTest,
                         ::testing::ValuesIn(CorpusNames()), TestName);

}  // namespace
}  // namespace polymat

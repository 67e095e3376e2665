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

#ifndef POLYMAT_VALUATIVE_H_
#define POLYMAT_VALUATIVE_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "polymat/point_set.h"
#include "polymat/rational.h"
#include "polymat/sparse_poly.h"

namespace polymat {

// A formal integer combination of base point sets, expected to vanish as a
// combination of indicator functions.
struct Relation {
  std::vector<std::pair<int, PointSet>> terms;
};

struct Split {
  PointSet lower;   // sum_{j in J} n_j <= c
  PointSet upper;   // sum_{j in J} n_j >= c
  PointSet middle;  // sum_{j in J} n_j == c
};

// Cuts an M-convex set along sum_{j in J} n_j = c. Throws NotMConvex if `s`
// or a piece is not M-convex, EmptyPiece if any piece is empty.
Split HyperplaneSplit(const PointSet& s, SubsetMask J, int c);

// 1_S - 1_lower - 1_upper + 1_middle.
Relation SplitRelation(const PointSet& s, const Split& split);

struct RelationCheck {
  bool holds = false;
  // First point (in scan order) where the combination does not vanish. For
  // grid points the coordinates are multiples of 1/3.
  std::optional<std::vector<Rational>> witness;
  std::string reason;
};

// Checks sum_i a_i [n in S_i] = 0 on every lattice point of the bounding
// box, then on the grid (1/3) Z^p inside the box using the rank inequalities
// of each piece's base polytope.
RelationCheck CheckRelation(const Relation& relation);

struct ValuativeResult {
  bool vanishes = false;
  SparsePoly residual;
};

// sum_i a_i cave(S_i). Throws RelationInvalid when CheckRelation fails.
ValuativeResult ValuativeCheck(const Relation& relation);

// sum_i a_i mu_{S_i}, as a polynomial sum_n (...) t^n.
SparsePoly MobiusResidual(const Relation& relation);

struct SplitChoice {
  SubsetMask subset = 0;
  int threshold = 0;
};

// All (J, c) with 1 <= |J| < p whose split has three nonempty M-convex
// pieces and where c lies strictly inside the range of sum_{j in J} n_j, in
// ascending (J, c) order.
std::vector<SplitChoice> ProperSplits(const PointSet& s);

// Uniformly picks one of ProperSplits(s); nullopt if there is none.
std::optional<SplitChoice> RandomSplit(const PointSet& s, std::mt19937_64& rng);

}  // namespace polymat

#endif  // POLYMAT_VALUATIVE_H_

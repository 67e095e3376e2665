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

#ifndef POLYMAT_IO_H_
#define POLYMAT_IO_H_

#include <string>

#include <nlohmann/json.hpp>

#include "polymat/invariants.h"
#include "polymat/point_set.h"
#include "polymat/polymatroid.h"
#include "polymat/sparse_poly.h"
#include "polymat/syzygy.h"

namespace polymat {

using Json = nlohmann::json;

// Polymatroid files:
//   {"p": 3, "cage": [2,2,4], "rank": {"1": 2, "1,2": 4, ...}}
//   {"p": 2, "base_points": [[1,0],[0,1]]}
// "cage" is optional; exactly one of "rank" and "base_points" is present.
// Structural problems throw MalformedInput; semantic ones (axioms, missing
// subsets, non-M-convex points) throw the corresponding domain error.
Polymatroid PolymatroidFromJson(const Json& j);
Json PolymatroidToJson(const Polymatroid& P);

// {"vars": ["t1", ...], "terms": [{"exp": [...], "coeff": "-2"}, ...]}
// with terms in descending lexicographic order of exponents. Variable k is
// named "t" + (k + first_index).
Json PolyToJson(const SparsePoly& f, int first_index = 1);
SparsePoly PolyFromJson(const Json& j);

// {"p": 3, "points": [[...], ...]}
Json PointSetToJson(const PointSet& s);
PointSet PointSetFromJson(const Json& j);

// {"p": 3, "values": [{"point": [...], "mu": -2}, ...]}
Json MobiusToJson(const MobiusTable& mu);
MobiusTable MobiusFromJson(const Json& j);

// {"nvars": 3, "entries": [{"i": 1, "degree": [...], "beta": 2}, ...]}
Json BettiToJson(const BettiTable& betti);
BettiTable BettiFromJson(const Json& j);

// {"nvars": 3, "generators": [[...], ...]}
Json IdealToJson(const MonomialIdeal& ideal);
MonomialIdeal IdealFromJson(const Json& j);

// CSV renderings: "n1,...,np,mu" and "i,b1,...,bp,beta".
std::string MobiusToCsv(const MobiusTable& mu);
std::string BettiToCsv(const BettiTable& betti);

// Parses "2,2,4" (used for cages, points and permutations on the command
// line). Throws MalformedInput.
LatticePoint ParseIntList(const std::string& text);

}  // namespace polymat

#endif  // POLYMAT_IO_H_

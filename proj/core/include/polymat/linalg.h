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

#ifndef POLYMAT_LINALG_H_
#define POLYMAT_LINALG_H_

#include <vector>

#include "polymat/rational.h"

namespace polymat {

using IntegerMatrix = std::vector<std::vector<Integer>>;

// Rank over Q by fraction-free (Bareiss) elimination. Rows may be empty;
// all rows must have equal length.
int MatrixRank(IntegerMatrix m);

// Rank of a rational matrix, after clearing denominators row by row.
int MatrixRank(const std::vector<std::vector<Rational>>& m);

}  // namespace polymat

#endif  // POLYMAT_LINALG_H_

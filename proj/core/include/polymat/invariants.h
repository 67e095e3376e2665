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

#ifndef POLYMAT_INVARIANTS_H_
#define POLYMAT_INVARIANTS_H_

#include <span>
#include <utility>
#include <vector>

#include "polymat/point_set.h"
#include "polymat/polymatroid.h"
#include "polymat/sparse_poly.h"

namespace polymat {

// Integer values of the Möbius function on I(P) cap N^p; every point outside
// that domain implicitly has value 0.
class MobiusTable {
 public:
  using Entry = std::pair<LatticePoint, int>;

  MobiusTable(int p, std::vector<Entry> entries);

  int p() const { return p_; }
  // Entries in ascending lexicographic order of the point.
  const std::vector<Entry>& entries() const { return entries_; }

  int at(std::span<const int> n) const;
  long long Sum() const;

  friend bool operator==(const MobiusTable&, const MobiusTable&) = default;

 private:
  int p_;
  std::vector<Entry> entries_;
};

// mu(n) = 1 on base points and, for the remaining independent points,
//   mu(n) = 1 - sum { mu(w) : w in I(P), w >= n, w != n },
// evaluated in decreasing order of |n|.
MobiusTable Mobius(const Polymatroid& P);

// {n : mu(n) != 0}.
PointSet MobiusSupport(const Polymatroid& P);
PointSet MobiusSupport(const MobiusTable& mu);

// sum_n mu(n) t^n.
SparsePoly MobiusPolynomial(const MobiusTable& mu);

// Product formula over base points: each base point n contributes
//   t^n prod_{i<p} (1 - s_i(n) / t_i),  s_i(n) = max_{j>i} [n - e_i + e_j in P].
SparsePoly Cave(const Polymatroid& P);

// The same product with the roles of the coordinates reordered by `perm`
// (0-based, perm[i] = pi(i+1) - 1). Throws InvalidParameter if `perm` is not
// a permutation of [p].
SparsePoly CavePermuted(const Polymatroid& P, std::span<const int> perm);

// The linear map t^n -> prod_i binom(t_i + n_i, n_i), expanded in the
// monomial basis.
SparsePoly BinomialTransform(const SparsePoly& f);

SparsePoly Snapper(const Polymatroid& P);

// Whether the support of the homogenization of f is M-convex.
// Throws ZeroPolynomial.
bool IsGeneralizedPolymatroid(const SparsePoly& f);

}  // namespace polymat

#endif  // POLYMAT_INVARIANTS_H_

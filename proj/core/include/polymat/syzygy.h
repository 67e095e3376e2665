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

#ifndef POLYMAT_SYZYGY_H_
#define POLYMAT_SYZYGY_H_

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polymat/point_set.h"
#include "polymat/polymatroid.h"
#include "polymat/sparse_poly.h"

namespace polymat {

// A monomial ideal given by its minimal generators (as exponent vectors).
// An empty generator list is the zero ideal.
class MonomialIdeal {
 public:
  // Drops generators divisible by another generator.
  MonomialIdeal(int nvars, std::vector<LatticePoint> generators);

  int nvars() const { return generators_.p(); }
  const PointSet& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

  // x^n in I.
  bool Contains(std::span<const int> n) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  PointSet generators_;
};

// One generator per line as "x1^2*x3^3".
std::string FormatIdeal(const MonomialIdeal& ideal);

// Multigraded Betti numbers beta_{i,b} (only nonzero entries are stored).
class BettiTable {
 public:
  using Key = std::pair<int, LatticePoint>;

  explicit BettiTable(int nvars) : nvars_(nvars) {}
  BettiTable(int nvars, std::map<Key, long long> entries);

  int nvars() const { return nvars_; }
  const std::map<Key, long long>& entries() const { return entries_; }
  long long at(int i, const LatticePoint& b) const;

  // Largest i with a nonzero entry; -1 when empty.
  int ProjectiveDimension() const;

  // sum_i (-1)^i sum_b beta_{i,b}.
  long long AlternatingSum() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int nvars_;
  std::map<Key, long long> entries_;
};

MonomialIdeal PolymatroidalIdeal(const Polymatroid& P);

// beta_{i,b}(I) = dim H~_{i-1}(K^b(I); Q) where
//   K^b(I) = { s subset [p] : b - s >= 0 and x^(b - s) in I }
// is the upper Koszul simplicial complex. Every b in the box below the
// componentwise maximum of the generators is examined; `threads` workers
// split the box. Throws EmptyIdeal for the zero ideal.
BettiTable ComputeBettiTable(const MonomialIdeal& ideal, int threads = 1);

// sum_{i,b} (-1)^i beta_{i,b} t^b.
SparsePoly KPolynomialFromBetti(const BettiTable& betti);

// t^m cave_{dual}(1/t_1, ..., 1/t_p), the dual taken with respect to `cage`.
// Throws CageTooSmall.
SparsePoly KPolynomialFromCave(const Polymatroid& P, std::span<const int> cage);

// Generated by x^n with |n| = rk(P) + i and mu_dual(m - n) != 0, where the
// dual is taken with respect to `cage`. Empty beyond the projective
// dimension.
MonomialIdeal HsIdeal(const Polymatroid& P, std::span<const int> cage, int i);

// Generated by x^b for the multidegrees b with beta_{i,b} != 0.
MonomialIdeal HsFromBetti(const BettiTable& betti, int i);

}  // namespace polymat

#endif  // POLYMAT_SYZYGY_H_

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

#ifndef POLYMAT_POINT_SET_H_
#define POLYMAT_POINT_SET_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace polymat {

// A point of Z^p. Most of the library works inside N^p; a few queries
// (polytope membership, ideal membership) accept arbitrary integer points and
// treat negative coordinates as "outside".
using LatticePoint = std::vector<int>;

// Subsets of [p] are bitmasks, bit i standing for element i+1.
using SubsetMask = std::uint32_t;

inline constexpr int kMaxGroundSet = 16;

int CoordinateSum(std::span<const int> n);

// w <= n componentwise.
bool LessEqual(std::span<const int> w, std::span<const int> n);

// Sum of n_j over j in `mask`.
int SubsetSum(std::span<const int> n, SubsetMask mask);

LatticePoint UnitVector(int p, int i);

// "(1,0,2)".
std::string PointToString(std::span<const int> n);

// "1,3" for the mask {1,3}; "" for the empty set.
std::string SubsetKey(SubsetMask mask);

// Inverse of SubsetKey. Throws MalformedInput on bad syntax and
// InvalidParameter on indices outside [1, p].
SubsetMask ParseSubsetKey(const std::string& key, int p);

// A finite set of lattice points in N^p held in ascending lexicographic
// order without duplicates.
class PointSet {
 public:
  using const_iterator = std::vector<LatticePoint>::const_iterator;

  explicit PointSet(int p) : p_(p) {}

  // Sorts and deduplicates. Throws DimensionMismatch for points of the wrong
  // length and InvalidParameter for negative coordinates.
  PointSet(int p, std::vector<LatticePoint> points);
  PointSet(int p, std::initializer_list<LatticePoint> points)
      : PointSet(p, std::vector<LatticePoint>(points)) {}

  int p() const { return p_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<LatticePoint>& points() const { return points_; }
  const LatticePoint& operator[](std::size_t i) const { return points_[i]; }
  const_iterator begin() const { return points_.begin(); }
  const_iterator end() const { return points_.end(); }

  bool contains(std::span<const int> n) const;

  // Componentwise maximum over the points; all zeros when empty.
  LatticePoint Max() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int p_;
  std::vector<LatticePoint> points_;
};

// Symmetric exchange check: for a, b in S and a_i > b_i there is j with
// a_j < b_j and a - e_i + e_j in S. Empty sets and sets of unequal
// coordinate sum are rejected.
bool IsMConvex(const PointSet& s);

// {n - b : n in S, n >= b}.
PointSet TranslateMinus(const PointSet& s, std::span<const int> b);

// {n in S : n >= b}.
PointSet Truncate(const PointSet& s, std::span<const int> b);

}  // namespace polymat

#endif  // POLYMAT_POINT_SET_H_

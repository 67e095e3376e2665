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

#ifndef POLYMAT_POLYMATROID_H_
#define POLYMAT_POLYMATROID_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polymat/point_set.h"

namespace polymat {

// An integer polymatroid on [p] together with a cage m >= (rk{1},...,rk{p}).
//
// The rank table is indexed by subset bitmask and always has 2^p entries with
// rank(0) == 0. Instances are only produced by Create() and the constructions
// below, so every live Polymatroid satisfies normalization, monotonicity,
// submodularity and the cage bound.
class Polymatroid {
 public:
  // `rank_table` has 2^p entries indexed by mask; entry 0 must be 0.
  // Throws InvalidParameter, DimensionMismatch, AxiomViolation or
  // CageTooSmall.
  static Polymatroid Create(int p, std::vector<int> rank_table,
                            std::optional<LatticePoint> cage = std::nullopt);

  // Same, from a mapping over nonempty subsets. Throws MissingSubset when a
  // nonempty subset has no entry.
  static Polymatroid FromRankMap(int p, const std::map<SubsetMask, int>& ranks,
                                 std::optional<LatticePoint> cage =
                                     std::nullopt);

  int p() const { return p_; }
  const LatticePoint& cage() const { return cage_; }
  int rank(SubsetMask mask) const { return rank_[mask]; }
  int total_rank() const { return rank_.back(); }
  SubsetMask full_mask() const { return (SubsetMask{1} << p_) - 1; }
  const std::vector<int>& rank_table() const { return rank_; }

  // Same polymatroid, different cage. Throws CageTooSmall.
  Polymatroid WithCage(LatticePoint cage) const;

  friend bool operator==(const Polymatroid&, const Polymatroid&) = default;

 private:
  Polymatroid(int p, std::vector<int> rank, LatticePoint cage)
      : p_(p), rank_(std::move(rank)), cage_(std::move(cage)) {}

  int p_;
  std::vector<int> rank_;
  LatticePoint cage_;
};

// Lattice points of the base polytope.
PointSet BasePoints(const Polymatroid& P);

// Lattice points of the independence polytope.
PointSet IndependencePoints(const Polymatroid& P);

// Membership in B(P) and I(P). Negative coordinates are never members.
// Both throw DimensionMismatch for points of the wrong length.
bool ContainsBase(const Polymatroid& P, std::span<const int> n);
bool ContainsIndependent(const Polymatroid& P, std::span<const int> n);

// 1 when some base point w satisfies w <= n, else 0. This is the
// dimension of the degree-n component of the polymatroidal ideal.
int DominatesBase(const Polymatroid& P, std::span<const int> n);

// The polymatroid whose base points are `s`. The cage is the tightest legal
// one. Throws NotMConvex.
Polymatroid RankFromPoints(const PointSet& s);

// Dual with respect to `cage`:
//   rk_dual(J) = m(J) + rk([p] \ J) - rk([p]).
// The result carries `cage`. Throws CageTooSmall or DimensionMismatch.
Polymatroid Dual(const Polymatroid& P, std::span<const int> cage);
inline Polymatroid Dual(const Polymatroid& P) { return Dual(P, P.cage()); }

// {m - n : n in s}. Throws NegativeExponent if some n is not below m.
PointSet ReflectPoints(const PointSet& s, std::span<const int> cage);

// rk(J) = matroid_rank(union of subsets[j] over j in J). Subsets are bitmasks
// over a ground set of at most 64 elements. The cage is (|S_1|,...,|S_p|).
using MatroidRankOracle = std::function<int(std::uint64_t)>;
Polymatroid RestrictionPolymatroid(const MatroidRankOracle& matroid_rank,
                                   std::span<const std::uint64_t> subsets);

struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

// |V| - #components of (V, A) for the edge set A.
int GraphicRank(const Graph& graph, std::uint64_t edge_mask);

Graph CompleteGraph(int vertices);
Graph PathGraph(int vertices);
Graph CycleGraph(int vertices);

// rk(J) = min(r, sum_{j in J} m_j) with cage m.
Polymatroid Uniform(int p, std::span<const int> weights, int r);

// Cycle matroid of `graph` (one element per edge), cage all ones.
Polymatroid Graphic(const Graph& graph);

Polymatroid DirectSum(const Polymatroid& P, const Polymatroid& Q);

}  // namespace polymat

#endif  // POLYMAT_POLYMATROID_H_

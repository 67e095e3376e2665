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

#include "polymat/polymatroid.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "polymat/error.h"

namespace polymat {
namespace {

std::string SetString(SubsetMask mask) { return "{" + SubsetKey(mask) + "}"; }

void CheckDimension(const Polymatroid& P, std::span<const int> n) {
  if (static_cast<int>(n.size()) != P.p()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point " + PointToString(n) + " does not have " +
                    std::to_string(P.p()) + " coordinates",
                PointToString(n));
  }
}

void CheckCage(int p, const std::vector<int>& rank, const LatticePoint& cage) {
  if (static_cast<int>(cage.size()) != p) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cage has " + std::to_string(cage.size()) +
                    " entries, expected " + std::to_string(p),
                PointToString(cage));
  }
  for (int i = 0; i < p; ++i) {
    const int singleton = rank[SubsetMask{1} << i];
    if (singleton > cage[i]) {
      throw Error(ErrorCode::kCageTooSmall,
                  "rk({" + std::to_string(i + 1) + "}) = " +
                      std::to_string(singleton) + " exceeds cage entry m_" +
                      std::to_string(i + 1) + " = " + std::to_string(cage[i]),
                  PointToString(cage));
    }
  }
}

// Monotonicity and submodularity only need to be checked on covering pairs:
// rk(J) <= rk(J+i), and rk(J+i+j) + rk(J) <= rk(J+i) + rk(J+j).
void CheckAxioms(int p, const std::vector<int>& rank) {
  const SubsetMask full = (SubsetMask{1} << p) - 1;
  if (rank[0] != 0) {
    throw Error(ErrorCode::kAxiomViolation,
                "normalization violated: rk({}) must be 0", "{}");
  }
  for (SubsetMask J = 1; J <= full; ++J) {
    if (rank[J] < 0) {
      throw Error(ErrorCode::kAxiomViolation,
                  "nonnegativity violated: rk(" + SetString(J) + ") = " +
                      std::to_string(rank[J]),
                  SetString(J));
    }
  }
  for (SubsetMask J = 0; J <= full; ++J) {
    for (int i = 0; i < p; ++i) {
      const SubsetMask bit = SubsetMask{1} << i;
      if (J & bit) continue;
      if (rank[J] > rank[J | bit]) {
        throw Error(ErrorCode::kAxiomViolation,
                    "monotonicity violated: rk(" + SetString(J) + ") = " +
                        std::to_string(rank[J]) + " > rk(" +
                        SetString(J | bit) +
                        ") = " + std::to_string(rank[J | bit]),
                    SetString(J) + " <= " + SetString(J | bit));
      }
    }
  }
  for (SubsetMask J = 0; J <= full; ++J) {
    for (int i = 0; i < p; ++i) {
      const SubsetMask bi = SubsetMask{1} << i;
      if (J & bi) continue;
      for (int j = i + 1; j < p; ++j) {
        const SubsetMask bj = SubsetMask{1} << j;
        if (J & bj) continue;
        const SubsetMask A = J | bi;
        const SubsetMask B = J | bj;
        if (rank[A & B] + rank[A | B] > rank[A] + rank[B]) {
          throw Error(ErrorCode::kAxiomViolation,
                      "submodularity violated: rk(" + SetString(A & B) +
                          ") + rk(" + SetString(A | B) + ") = " +
                          std::to_string(rank[A & B] + rank[A | B]) +
                          " > rk(" + SetString(A) + ") + rk(" + SetString(B) +
                          ") = " + std::to_string(rank[A] + rank[B]),
                      SetString(A) + " " + SetString(B));
        }
      }
    }
  }
}

// Depth-first enumeration of I(P) cap N^p (or B(P) when `base_only`),
// coordinate by coordinate. After fixing coordinate k, only the inequalities
// whose highest element is k become decidable.
class PointEnumerator {
 public:
  PointEnumerator(const Polymatroid& P, bool base_only)
      : P_(P), base_only_(base_only), point_(P.p(), 0), by_top_(P.p()) {
    for (SubsetMask J = 1; J <= P.full_mask(); ++J) {
      by_top_[std::bit_width(J) - 1].push_back(J);
    }
    upper_.resize(P.p());
    for (int i = 0; i < P.p(); ++i) {
      upper_[i] = std::min(P.cage()[i], P.rank(SubsetMask{1} << i));
    }
    suffix_capacity_.assign(P.p() + 1, 0);
    for (int i = P.p() - 1; i >= 0; --i) {
      suffix_capacity_[i] = suffix_capacity_[i + 1] + upper_[i];
    }
  }

  std::vector<LatticePoint> Run() {
    Visit(0, 0);
    return std::move(out_);
  }

 private:
  void Visit(int k, int sum) {
    const int p = P_.p();
    if (k == p) {
      if (!base_only_ || sum == P_.total_rank()) out_.push_back(point_);
      return;
    }
    for (int v = 0; v <= upper_[k]; ++v) {
      if (base_only_ && sum + v + suffix_capacity_[k + 1] < P_.total_rank()) {
        continue;
      }
      point_[k] = v;
      bool ok = true;
      for (SubsetMask J : by_top_[k]) {
        if (SubsetSum(point_, J) > P_.rank(J)) {
          ok = false;
          break;
        }
      }
      // Larger values of coordinate k only make the sums bigger.
      if (!ok) break;
      Visit(k + 1, sum + v);
    }
    point_[k] = 0;
  }

  const Polymatroid& P_;
  bool base_only_;
  LatticePoint point_;
  std::vector<std::vector<SubsetMask>> by_top_;
  std::vector<int> upper_;
  std::vector<int> suffix_capacity_;
  std::vector<LatticePoint> out_;
};

}  // namespace

Polymatroid Polymatroid::Create(int p, std::vector<int> rank_table,
                                std::optional<LatticePoint> cage) {
  if (p < 1 || p > kMaxGroundSet) {
    throw Error(ErrorCode::kInvalidParameter,
                "ground set size " + std::to_string(p) + " outside [1," +
                    std::to_string(kMaxGroundSet) + "]");
  }
  if (rank_table.size() != (std::size_t{1} << p)) {
    throw Error(ErrorCode::kMissingSubset,
                "rank table has " + std::to_string(rank_table.size()) +
                    " entries, expected " + std::to_string(1 << p));
  }
  CheckAxioms(p, rank_table);
  LatticePoint m;
  if (cage) {
    m = *std::move(cage);
  } else {
    m.resize(p);
    for (int i = 0; i < p; ++i) m[i] = rank_table[SubsetMask{1} << i];
  }
  CheckCage(p, rank_table, m);
  return Polymatroid(p, std::move(rank_table), std::move(m));
}

Polymatroid Polymatroid::FromRankMap(int p,
                                     const std::map<SubsetMask, int>& ranks,
                                     std::optional<LatticePoint> cage) {
  if (p < 1 || p > kMaxGroundSet) {
    throw Error(ErrorCode::kInvalidParameter,
                "ground set size " + std::to_string(p) + " outside [1," +
                    std::to_string(kMaxGroundSet) + "]");
  }
  const SubsetMask full = (SubsetMask{1} << p) - 1;
  std::vector<int> table(std::size_t{full} + 1, 0);
  for (const auto& [mask, value] : ranks) {
    if (mask == 0) {
      if (value != 0) {
        throw Error(ErrorCode::kAxiomViolation,
                    "normalization violated: rk({}) must be 0", "{}");
      }
      continue;
    }
    if (mask > full) {
      throw Error(ErrorCode::kInvalidParameter,
                  "subset " + SetString(mask) + " is not contained in [" +
                      std::to_string(p) + "]",
                  SetString(mask));
    }
    table[mask] = value;
  }
  for (SubsetMask J = 1; J <= full; ++J) {
    if (!ranks.contains(J)) {
      throw Error(ErrorCode::kMissingSubset,
                  "rank table has no entry for " + SetString(J), SubsetKey(J));
    }
  }
  return Create(p, std::move(table), std::move(cage));
}

Polymatroid Polymatroid::WithCage(LatticePoint cage) const {
  CheckCage(p_, rank_, cage);
  return Polymatroid(p_, rank_, std::move(cage));
}

PointSet BasePoints(const Polymatroid& P) {
  return PointSet(P.p(), PointEnumerator(P, /*base_only=*/true).Run());
}

PointSet IndependencePoints(const Polymatroid& P) {
  return PointSet(P.p(), PointEnumerator(P, /*base_only=*/false).Run());
}

bool ContainsIndependent(const Polymatroid& P, std::span<const int> n) {
  CheckDimension(P, n);
  if (std::any_of(n.begin(), n.end(), [](int v) { return v < 0; })) {
    return false;
  }
  for (SubsetMask J = 1; J <= P.full_mask(); ++J) {
    if (SubsetSum(n, J) > P.rank(J)) return false;
  }
  return true;
}

bool ContainsBase(const Polymatroid& P, std::span<const int> n) {
  CheckDimension(P, n);
  return CoordinateSum(n) == P.total_rank() && ContainsIndependent(P, n);
}

// The independent points below n form a polymatroid with rank
// r(J) = min_{K subset J} rk(K) + n(J \ K); a base point lies below n exactly
// when r([p]) reaches rk([p]).
int DominatesBase(const Polymatroid& P, std::span<const int> n) {
  CheckDimension(P, n);
  if (std::any_of(n.begin(), n.end(), [](int v) { return v < 0; })) return 0;
  const SubsetMask full = P.full_mask();
  for (SubsetMask K = 0; K <= full; ++K) {
    if (P.rank(K) + SubsetSum(n, full & ~K) < P.total_rank()) return 0;
  }
  return 1;
}

Polymatroid RankFromPoints(const PointSet& s) {
  if (!IsMConvex(s)) {
    throw Error(ErrorCode::kNotMConvex,
                "point set is not M-convex (" + std::to_string(s.size()) +
                    " points)");
  }
  const int p = s.p();
  std::vector<int> table(std::size_t{1} << p, 0);
  for (SubsetMask J = 1; J < table.size(); ++J) {
    int best = 0;
    for (const auto& n : s) best = std::max(best, SubsetSum(n, J));
    table[J] = best;
  }
  return Polymatroid::Create(p, std::move(table));
}

Polymatroid Dual(const Polymatroid& P, std::span<const int> cage) {
  LatticePoint m(cage.begin(), cage.end());
  // Validates the cage against P before anything else.
  (void)P.WithCage(m);
  const SubsetMask full = P.full_mask();
  std::vector<int> table(std::size_t{full} + 1, 0);
  for (SubsetMask J = 1; J <= full; ++J) {
    table[J] = SubsetSum(m, J) + P.rank(full & ~J) - P.total_rank();
  }
  return Polymatroid::Create(P.p(), std::move(table), std::move(m));
}

PointSet ReflectPoints(const PointSet& s, std::span<const int> cage) {
  if (static_cast<int>(cage.size()) != s.p()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cage has the wrong number of coordinates",
                PointToString(cage));
  }
  std::vector<LatticePoint> out;
  out.reserve(s.size());
  for (const auto& n : s) {
    LatticePoint r(s.p());
    for (int i = 0; i < s.p(); ++i) {
      r[i] = cage[i] - n[i];
      if (r[i] < 0) {
        throw Error(ErrorCode::kNegativeExponent,
                    "point " + PointToString(n) + " is not below the cage",
                    PointToString(n));
      }
    }
    out.push_back(std::move(r));
  }
  return PointSet(s.p(), std::move(out));
}

Polymatroid RestrictionPolymatroid(const MatroidRankOracle& matroid_rank,
                                   std::span<const std::uint64_t> subsets) {
  const int p = static_cast<int>(subsets.size());
  if (p < 1 || p > kMaxGroundSet) {
    throw Error(ErrorCode::kInvalidParameter,
                "number of subsets " + std::to_string(p) + " outside [1," +
                    std::to_string(kMaxGroundSet) + "]");
  }
  std::vector<int> table(std::size_t{1} << p, 0);
  for (SubsetMask J = 1; J < table.size(); ++J) {
    std::uint64_t uni = 0;
    for (int j = 0; j < p; ++j) {
      if (J & (SubsetMask{1} << j)) uni |= subsets[j];
    }
    table[J] = matroid_rank(uni);
  }
  table[0] = matroid_rank(0);
  LatticePoint cage(p);
  for (int j = 0; j < p; ++j) cage[j] = std::popcount(subsets[j]);
  return Polymatroid::Create(p, std::move(table), std::move(cage));
}

int GraphicRank(const Graph& graph, std::uint64_t edge_mask) {
  std::vector<int> parent(graph.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int rank = 0;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    if (!(edge_mask & (std::uint64_t{1} << e))) continue;
    const int a = find(graph.edges[e].first);
    const int b = find(graph.edges[e].second);
    if (a != b) {
      parent[a] = b;
      ++rank;
    }
  }
  return rank;
}

Graph CompleteGraph(int vertices) {
  Graph g{vertices, {}};
  for (int a = 0; a < vertices; ++a) {
    for (int b = a + 1; b < vertices; ++b) g.edges.emplace_back(a, b);
  }
  return g;
}

Graph PathGraph(int vertices) {
  Graph g{vertices, {}};
  for (int a = 0; a + 1 < vertices; ++a) g.edges.emplace_back(a, a + 1);
  return g;
}

Graph CycleGraph(int vertices) {
  Graph g = PathGraph(vertices);
  if (vertices >= 3) g.edges.emplace_back(vertices - 1, 0);
  return g;
}

Polymatroid Uniform(int p, std::span<const int> weights, int r) {
  if (static_cast<int>(weights.size()) != p) {
    throw Error(ErrorCode::kInvalidParameter,
                "uniform: expected " + std::to_string(p) + " weights");
  }
  if (std::any_of(weights.begin(), weights.end(), [](int w) { return w < 0; })) {
    throw Error(ErrorCode::kInvalidParameter, "uniform: negative weight");
  }
  const int total = std::accumulate(weights.begin(), weights.end(), 0);
  if (r < 0 || r > total) {
    throw Error(ErrorCode::kInvalidParameter,
                "uniform: rank " + std::to_string(r) + " outside [0," +
                    std::to_string(total) + "]");
  }
  if (p < 1 || p > kMaxGroundSet) {
    throw Error(ErrorCode::kInvalidParameter, "uniform: bad ground set size");
  }
  std::vector<int> table(std::size_t{1} << p, 0);
  for (SubsetMask J = 1; J < table.size(); ++J) {
    table[J] = std::min(r, SubsetSum(weights, J));
  }
  return Polymatroid::Create(p, std::move(table),
                             LatticePoint(weights.begin(), weights.end()));
}

Polymatroid Graphic(const Graph& graph) {
  const int p = static_cast<int>(graph.edges.size());
  if (p < 1 || p > kMaxGroundSet) {
    throw Error(ErrorCode::kInvalidParameter,
                "graphic: edge count " + std::to_string(p) + " outside [1," +
                    std::to_string(kMaxGroundSet) + "]");
  }
  for (const auto& [a, b] : graph.edges) {
    if (a < 0 || b < 0 || a >= graph.vertices || b >= graph.vertices) {
      throw Error(ErrorCode::kInvalidParameter,
                  "graphic: edge endpoint outside the vertex range");
    }
  }
  std::vector<int> table(std::size_t{1} << p, 0);
  for (SubsetMask J = 1; J < table.size(); ++J) {
    table[J] = GraphicRank(graph, J);
  }
  return Polymatroid::Create(p, std::move(table), LatticePoint(p, 1));
}

Polymatroid DirectSum(const Polymatroid& P, const Polymatroid& Q) {
  const int p = P.p() + Q.p();
  if (p > kMaxGroundSet) {
    throw Error(ErrorCode::kInvalidParameter,
                "direct sum would have " + std::to_string(p) + " elements");
  }
  std::vector<int> table(std::size_t{1} << p, 0);
  for (SubsetMask J = 1; J < table.size(); ++J) {
    table[J] = P.rank(J & P.full_mask()) + Q.rank(J >> P.p());
  }
  LatticePoint cage = P.cage();
  cage.insert(cage.end(), Q.cage().begin(), Q.cage().end());
  return Polymatroid::Create(p, std::move(table), std::move(cage));
}

}  // namespace polymat

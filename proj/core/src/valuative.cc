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

#include <algorithm>
#include <bit>
#include <set>

#include "polymat/error.h"
#include "polymat/invariants.h"
#include "polymat/polymatroid.h"

namespace polymat {
namespace {

int RelationDimension(const Relation& relation) {
  return relation.terms.empty() ? 0 : relation.terms.front().second.p();
}

// Calls visit(u) for every u in [0, box]^p with coordinate sum `total`.
template <typename Visit>
void ForEachComposition(const LatticePoint& box, int total, Visit&& visit) {
  const int p = static_cast<int>(box.size());
  std::vector<int> suffix(p + 1, 0);
  for (int i = p - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + box[i];
  LatticePoint u(p, 0);
  auto recurse = [&](auto&& self, int k, int remaining) -> bool {
    if (k == p) return remaining != 0 || visit(u);
    const int lo = std::max(0, remaining - suffix[k + 1]);
    const int hi = std::min(box[k], remaining);
    for (int v = lo; v <= hi; ++v) {
      u[k] = v;
      if (!self(self, k + 1, remaining - v)) return false;
    }
    u[k] = 0;
    return true;
  };
  recurse(recurse, 0, total);
}

}  // namespace

Split HyperplaneSplit(const PointSet& s, SubsetMask J, int c) {
  if (J == 0 || J >= (SubsetMask{1} << s.p())) {
    throw Error(ErrorCode::kInvalidParameter,
                "split subset must be a nonempty subset of [" +
                    std::to_string(s.p()) + "]",
                SubsetKey(J));
  }
  if (!IsMConvex(s)) {
    throw Error(ErrorCode::kNotMConvex, "the set to split is not M-convex");
  }
  std::vector<LatticePoint> lower, upper, middle;
  for (const auto& n : s) {
    const int value = SubsetSum(n, J);
    if (value <= c) lower.push_back(n);
    if (value >= c) upper.push_back(n);
    if (value == c) middle.push_back(n);
  }
  Split split{PointSet(s.p(), std::move(lower)),
              PointSet(s.p(), std::move(upper)),
              PointSet(s.p(), std::move(middle))};
  const std::pair<const char*, const PointSet*> pieces[] = {
      {"lower", &split.lower}, {"upper", &split.upper},
      {"middle", &split.middle}};
  for (const auto& [name, piece] : pieces) {
    if (piece->empty()) {
      throw Error(ErrorCode::kEmptyPiece,
                  std::string("split along {") + SubsetKey(J) + "} at " +
                      std::to_string(c) + " has an empty " + name + " piece",
                  name);
    }
  }
  for (const auto& [name, piece] : pieces) {
    if (!IsMConvex(*piece)) {
      throw Error(ErrorCode::kNotMConvex,
                  std::string("the ") + name + " piece is not M-convex", name);
    }
  }
  return split;
}

Relation SplitRelation(const PointSet& s, const Split& split) {
  return Relation{{{1, s}, {-1, split.lower}, {-1, split.upper},
                   {1, split.middle}}};
}

RelationCheck CheckRelation(const Relation& relation) {
  const int p = RelationDimension(relation);
  for (const auto& [a, piece] : relation.terms) {
    if (piece.p() != p) {
      return {false, std::nullopt, "pieces live in different dimensions"};
    }
  }
  if (relation.terms.empty()) return {true, std::nullopt, ""};

  LatticePoint box(p, 0);
  std::set<int> degrees;
  for (const auto& [a, piece] : relation.terms) {
    const LatticePoint m = piece.Max();
    for (int i = 0; i < p; ++i) box[i] = std::max(box[i], m[i]);
    for (const auto& n : piece) degrees.insert(CoordinateSum(n));
  }

  // Lattice level. Points off every piece contribute nothing, so only the
  // points of the pieces need to be scanned, in term order.
  std::set<LatticePoint> seen;
  std::vector<LatticePoint> candidates;
  for (const auto& [a, piece] : relation.terms) {
    for (const auto& n : piece) {
      if (seen.insert(n).second) candidates.push_back(n);
    }
  }
  for (const auto& n : candidates) {
    long long total = 0;
    for (const auto& [a, piece] : relation.terms) {
      if (piece.contains(n)) total += a;
    }
    if (total != 0) {
      return {false, std::vector<Rational>(n.begin(), n.end()),
              "indicator combination is " + std::to_string(total) + " at " +
                  PointToString(n)};
    }
  }

  // Grid (1/3) Z^p against the rank inequalities of each piece.
  std::vector<Polymatroid> polymatroids;
  for (std::size_t k = 0; k < relation.terms.size(); ++k) {
    const PointSet& piece = relation.terms[k].second;
    if (piece.empty() || !IsMConvex(piece)) {
      return {false, std::nullopt,
              "piece " + std::to_string(k) + " is not M-convex"};
    }
    polymatroids.push_back(RankFromPoints(piece));
  }
  LatticePoint scaled_box = box;
  for (int& v : scaled_box) v *= 3;
  RelationCheck result{true, std::nullopt, ""};
  for (int degree : degrees) {
    ForEachComposition(scaled_box, 3 * degree, [&](const LatticePoint& u) {
      long long total = 0;
      for (std::size_t k = 0; k < polymatroids.size(); ++k) {
        const Polymatroid& P = polymatroids[k];
        if (P.total_rank() != degree) continue;
        bool inside = true;
        for (SubsetMask J = 1; J <= P.full_mask() && inside; ++J) {
          inside = SubsetSum(u, J) <= 3 * P.rank(J);
        }
        if (inside) total += relation.terms[k].first;
      }
      if (total == 0) return true;
      std::vector<Rational> w;
      for (int v : u) w.emplace_back(v, 3);
      result = {false, std::move(w),
                "indicator combination is " + std::to_string(total) +
                    " at a point of the (1/3)-grid"};
      return false;
    });
    if (!result.holds) return result;
  }
  return result;
}

ValuativeResult ValuativeCheck(const Relation& relation) {
  const RelationCheck check = CheckRelation(relation);
  if (!check.holds) {
    throw Error(ErrorCode::kRelationInvalid,
                "not a relation among indicator functions: " + check.reason);
  }
  SparsePoly residual(RelationDimension(relation));
  for (const auto& [a, piece] : relation.terms) {
    residual += Cave(RankFromPoints(piece)) * Rational(a);
  }
  const bool vanishes = residual.is_zero();
  return {vanishes, std::move(residual)};
}

SparsePoly MobiusResidual(const Relation& relation) {
  SparsePoly residual(RelationDimension(relation));
  for (const auto& [a, piece] : relation.terms) {
    const MobiusTable mobius = Mobius(RankFromPoints(piece));
    for (const auto& [n, value] : mobius.entries()) {
      residual.AddTerm(n, Rational(a) * value);
    }
  }
  return residual;
}

std::vector<SplitChoice> ProperSplits(const PointSet& s) {
  std::vector<SplitChoice> out;
  if (s.empty() || !IsMConvex(s)) return out;
  const SubsetMask full = (SubsetMask{1} << s.p()) - 1;
  for (SubsetMask J = 1; J < full; ++J) {
    int lo = SubsetSum(s[0], J);
    int hi = lo;
    for (const auto& n : s) {
      lo = std::min(lo, SubsetSum(n, J));
      hi = std::max(hi, SubsetSum(n, J));
    }
    for (int c = lo + 1; c < hi; ++c) {
      try {
        (void)HyperplaneSplit(s, J, c);
        out.push_back({J, c});
      } catch (const Error&) {
        // Not a usable cut; leave it out of the listing.
      }
    }
  }
  return out;
}

std::optional<SplitChoice> RandomSplit(const PointSet& s,
                                       std::mt19937_64& rng) {
  const auto splits = ProperSplits(s);
  if (splits.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, splits.size() - 1);
  return splits[pick(rng)];
}

}  // namespace polymat

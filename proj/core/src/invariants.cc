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

#include "polymat/invariants.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "polymat/error.h"

namespace polymat {
namespace {

SparsePoly CaveWithOrder(const Polymatroid& P, std::span<const int> order) {
  const int p = P.p();
  const PointSet base = BasePoints(P);
  SparsePoly cave(p);
  LatticePoint moved(p);
  for (const auto& n : base) {
    std::vector<int> lowered;
    for (int a = 0; a + 1 < p; ++a) {
      const int i = order[a];
      if (n[i] == 0) continue;
      bool exchangeable = false;
      for (int b = a + 1; b < p && !exchangeable; ++b) {
        const int j = order[b];
        moved = n;
        --moved[i];
        ++moved[j];
        exchangeable = base.contains(moved);
      }
      if (exchangeable) lowered.push_back(i);
    }
    const std::size_t k = lowered.size();
    for (std::size_t T = 0; T < (std::size_t{1} << k); ++T) {
      Exponent exp = n;
      int sign = 1;
      for (std::size_t t = 0; t < k; ++t) {
        if (T & (std::size_t{1} << t)) {
          --exp[lowered[t]];
          sign = -sign;
        }
      }
      cave.AddTerm(exp, sign);
    }
  }
  return cave;
}

}  // namespace

MobiusTable::MobiusTable(int p, std::vector<Entry> entries)
    : p_(p), entries_(std::move(entries)) {
  for (const auto& [n, value] : entries_) {
    if (static_cast<int>(n.size()) != p_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "Möbius entry " + PointToString(n) + " has the wrong length",
                  PointToString(n));
    }
  }
  std::sort(entries_.begin(), entries_.end());
}

int MobiusTable::at(std::span<const int> n) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), n,
      [](const Entry& e, std::span<const int> key) {
        return std::lexicographical_compare(e.first.begin(), e.first.end(),
                                            key.begin(), key.end());
      });
  if (it == entries_.end() || !std::equal(n.begin(), n.end(), it->first.begin(),
                                          it->first.end())) {
    return 0;
  }
  return it->second;
}

long long MobiusTable::Sum() const {
  long long total = 0;
  for (const auto& [n, value] : entries_) total += value;
  return total;
}

MobiusTable Mobius(const Polymatroid& P) {
  const PointSet independent = IndependencePoints(P);
  std::vector<const LatticePoint*> order;
  order.reserve(independent.size());
  for (const auto& n : independent) order.push_back(&n);
  std::stable_sort(order.begin(), order.end(),
                   [](const LatticePoint* a, const LatticePoint* b) {
                     return CoordinateSum(*a) > CoordinateSum(*b);
                   });
  const int rank = P.total_rank();
  std::vector<int> values(order.size(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const LatticePoint& n = *order[k];
    const int degree = CoordinateSum(n);
    if (degree == rank) {
      values[k] = 1;
      continue;
    }
    int above = 0;
    // Points with w >= n, w != n have strictly larger sum and sit earlier.
    for (std::size_t l = 0; l < k; ++l) {
      if (CoordinateSum(*order[l]) == degree) break;
      if (LessEqual(n, *order[l])) above += values[l];
    }
    values[k] = 1 - above;
  }
  std::vector<MobiusTable::Entry> entries;
  entries.reserve(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    entries.emplace_back(*order[k], values[k]);
  }
  return MobiusTable(P.p(), std::move(entries));
}

PointSet MobiusSupport(const MobiusTable& mu) {
  std::vector<LatticePoint> points;
  for (const auto& [n, value] : mu.entries()) {
    if (value != 0) points.push_back(n);
  }
  return PointSet(mu.p(), std::move(points));
}

PointSet MobiusSupport(const Polymatroid& P) { return MobiusSupport(Mobius(P)); }

SparsePoly MobiusPolynomial(const MobiusTable& mu) {
  SparsePoly f(mu.p());
  for (const auto& [n, value] : mu.entries()) f.AddTerm(n, value);
  return f;
}

SparsePoly Cave(const Polymatroid& P) {
  std::vector<int> identity(P.p());
  std::iota(identity.begin(), identity.end(), 0);
  return CaveWithOrder(P, identity);
}

SparsePoly CavePermuted(const Polymatroid& P, std::span<const int> perm) {
  std::vector<int> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> identity(P.p());
  std::iota(identity.begin(), identity.end(), 0);
  if (sorted != identity) {
    throw Error(ErrorCode::kInvalidParameter,
                "not a permutation of [" + std::to_string(P.p()) + "]",
                PointToString(perm));
  }
  return CaveWithOrder(P, perm);
}

SparsePoly BinomialTransform(const SparsePoly& f) {
  const int nvars = f.nvars();
  // binom(t_i + n, n) as a polynomial in t_i, cached per (i, n).
  std::map<std::pair<int, int>, SparsePoly> cache;
  auto binomial = [&](int var, int n) -> const SparsePoly& {
    auto [it, inserted] = cache.try_emplace({var, n}, nvars);
    if (inserted) {
      SparsePoly b = SparsePoly::Constant(nvars, 1);
      Integer factorial = 1;
      for (int k = 1; k <= n; ++k) {
        SparsePoly linear = SparsePoly::Constant(nvars, k);
        linear.AddTerm(UnitVector(nvars, var), 1);
        b = b * linear;
        factorial *= k;
      }
      it->second = b * Rational(1, factorial);
    }
    return it->second;
  };
  SparsePoly out(nvars);
  for (const auto& [exp, c] : f.terms()) {
    SparsePoly term = SparsePoly::Constant(nvars, c);
    for (int i = 0; i < nvars; ++i) {
      if (exp[i] > 0) term = term * binomial(i, exp[i]);
    }
    out += term;
  }
  return out;
}

SparsePoly Snapper(const Polymatroid& P) { return BinomialTransform(Cave(P)); }

bool IsGeneralizedPolymatroid(const SparsePoly& f) {
  return IsMConvex(Support(Homogenize(f)));
}

}  // namespace polymat

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

#include "polymat/syzygy.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <thread>

#include "polymat/error.h"
#include "polymat/invariants.h"
#include "polymat/linalg.h"

namespace polymat {
namespace {

std::vector<LatticePoint> Minimalize(int nvars,
                                     std::vector<LatticePoint> generators) {
  PointSet sorted(nvars, std::move(generators));
  std::vector<LatticePoint> kept;
  for (const auto& g : sorted) {
    bool redundant = false;
    for (const auto& h : sorted) {
      if (h != g && LessEqual(h, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

// Reduced homology ranks of the upper Koszul complex at one multidegree.
// `index` is scratch space of size 2^p.
void KoszulBetti(const MonomialIdeal& ideal, const LatticePoint& b,
                 std::vector<int>& index,
                 std::vector<std::pair<BettiTable::Key, long long>>& out) {
  const int p = ideal.nvars();
  if (!ideal.Contains(b)) return;  // void complex
  std::vector<std::vector<SubsetMask>> faces(p + 1);
  LatticePoint shifted(p);
  const SubsetMask full = (SubsetMask{1} << p) - 1;
  for (SubsetMask s = 0; s <= full; ++s) {
    bool ok = true;
    for (int v = 0; v < p; ++v) {
      shifted[v] = b[v] - ((s >> v) & 1);
      if (shifted[v] < 0) ok = false;
    }
    if (!ok || !ideal.Contains(shifted)) continue;
    auto& bucket = faces[std::popcount(s)];
    index[s] = static_cast<int>(bucket.size());
    bucket.push_back(s);
  }
  // boundary_rank[k] = rank of the boundary map from size-k faces to
  // size-(k-1) faces; boundary_rank[0] = 0.
  std::vector<int> boundary_rank(p + 2, 0);
  for (int k = 1; k <= p; ++k) {
    if (faces[k].empty() || faces[k - 1].empty()) continue;
    IntegerMatrix m(faces[k].size(),
                    std::vector<Integer>(faces[k - 1].size(), 0));
    for (std::size_t r = 0; r < faces[k].size(); ++r) {
      const SubsetMask s = faces[k][r];
      int position = 0;
      for (int v = 0; v < p; ++v) {
        const SubsetMask bit = SubsetMask{1} << v;
        if (!(s & bit)) continue;
        m[r][index[s & ~bit]] = (position % 2 == 0) ? 1 : -1;
        ++position;
      }
    }
    boundary_rank[k] = MatrixRank(std::move(m));
  }
  for (int i = 0; i <= p; ++i) {
    const long long beta = static_cast<long long>(faces[i].size()) -
                           boundary_rank[i] - boundary_rank[i + 1];
    if (beta != 0) out.push_back({{i, b}, beta});
  }
}

}  // namespace

MonomialIdeal::MonomialIdeal(int nvars, std::vector<LatticePoint> generators)
    : generators_(nvars, Minimalize(nvars, std::move(generators))) {}

bool MonomialIdeal::Contains(std::span<const int> n) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const LatticePoint& g) { return LessEqual(g, n); });
}

std::string FormatIdeal(const MonomialIdeal& ideal) {
  std::ostringstream out;
  for (const auto& g : ideal.generators()) {
    out << FormatMonomial(g, "x", 1) << '\n';
  }
  return out.str();
}

BettiTable::BettiTable(int nvars, std::map<Key, long long> entries)
    : nvars_(nvars), entries_(std::move(entries)) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (static_cast<int>(it->first.second.size()) != nvars_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "Betti multidegree has the wrong length",
                  PointToString(it->first.second));
    }
    it = it->second == 0 ? entries_.erase(it) : std::next(it);
  }
}

long long BettiTable::at(int i, const LatticePoint& b) const {
  auto it = entries_.find({i, b});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::ProjectiveDimension() const {
  return entries_.empty() ? -1 : entries_.rbegin()->first.first;
}

long long BettiTable::AlternatingSum() const {
  long long total = 0;
  for (const auto& [key, beta] : entries_) {
    total += (key.first % 2 == 0) ? beta : -beta;
  }
  return total;
}

MonomialIdeal PolymatroidalIdeal(const Polymatroid& P) {
  return MonomialIdeal(P.p(), BasePoints(P).points());
}

BettiTable ComputeBettiTable(const MonomialIdeal& ideal, int threads) {
  if (ideal.is_zero()) {
    throw Error(ErrorCode::kEmptyIdeal,
                "Betti numbers of the zero ideal are not defined");
  }
  const int p = ideal.nvars();
  const LatticePoint box = ideal.generators().Max();
  std::vector<LatticePoint> degrees;
  LatticePoint b(p, 0);
  while (true) {
    degrees.push_back(b);
    int v = 0;
    while (v < p && b[v] == box[v]) b[v++] = 0;
    if (v == p) break;
    ++b[v];
  }

  threads = std::max(1, std::min<int>(threads, static_cast<int>(degrees.size())));
  std::vector<std::vector<std::pair<BettiTable::Key, long long>>> partial(
      threads);
  auto work = [&](int worker) {
    std::vector<int> index(std::size_t{1} << p, 0);
    for (std::size_t k = worker; k < degrees.size(); k += threads) {
      KoszulBetti(ideal, degrees[k], index, partial[worker]);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  std::map<BettiTable::Key, long long> entries;
  for (auto& chunk : partial) {
    for (auto& [key, beta] : chunk) entries.emplace(std::move(key), beta);
  }
  return BettiTable(p, std::move(entries));
}

SparsePoly KPolynomialFromBetti(const BettiTable& betti) {
  SparsePoly k(betti.nvars());
  for (const auto& [key, beta] : betti.entries()) {
    k.AddTerm(key.second, key.first % 2 == 0 ? beta : -beta);
  }
  return k;
}

SparsePoly KPolynomialFromCave(const Polymatroid& P,
                               std::span<const int> cage) {
  return Twist(Cave(Dual(P, cage)), cage);
}

MonomialIdeal HsIdeal(const Polymatroid& P, std::span<const int> cage, int i) {
  if (i < 0) {
    throw Error(ErrorCode::kInvalidParameter,
                "homological index must be nonnegative");
  }
  const Polymatroid dual = Dual(P, cage);
  const int degree = P.total_rank() + i;
  const MobiusTable mobius = Mobius(dual);
  std::vector<LatticePoint> generators;
  for (const auto& [w, value] : mobius.entries()) {
    if (value == 0) continue;
    LatticePoint n(P.p());
    for (int k = 0; k < P.p(); ++k) n[k] = cage[k] - w[k];
    if (CoordinateSum(n) == degree) generators.push_back(std::move(n));
  }
  return MonomialIdeal(P.p(), std::move(generators));
}

MonomialIdeal HsFromBetti(const BettiTable& betti, int i) {
  std::vector<LatticePoint> generators;
  for (const auto& [key, beta] : betti.entries()) {
    if (key.first == i) generators.push_back(key.second);
  }
  return MonomialIdeal(betti.nvars(), std::move(generators));
}

}  // namespace polymat

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

#include "polymat/point_set.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "polymat/error.h"

namespace polymat {

int CoordinateSum(std::span<const int> n) {
  return std::accumulate(n.begin(), n.end(), 0);
}

bool LessEqual(std::span<const int> w, std::span<const int> n) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > n[i]) return false;
  }
  return true;
}

int SubsetSum(std::span<const int> n, SubsetMask mask) {
  int sum = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (mask & (SubsetMask{1} << i)) sum += n[i];
  }
  return sum;
}

LatticePoint UnitVector(int p, int i) {
  LatticePoint e(p, 0);
  e[i] = 1;
  return e;
}

std::string PointToString(std::span<const int> n) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i) out << ',';
    out << n[i];
  }
  out << ')';
  return out.str();
}

std::string SubsetKey(SubsetMask mask) {
  std::string key;
  for (int i = 0; i < kMaxGroundSet; ++i) {
    if (mask & (SubsetMask{1} << i)) {
      if (!key.empty()) key += ',';
      key += std::to_string(i + 1);
    }
  }
  return key;
}

SubsetMask ParseSubsetKey(const std::string& key, int p) {
  SubsetMask mask = 0;
  std::istringstream in(key);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item.empty() ||
        !std::all_of(item.begin(), item.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error(ErrorCode::kMalformedInput,
                  "malformed subset key \"" + key + "\"", key);
    }
    if (item.size() > 3) {
      throw Error(ErrorCode::kInvalidParameter,
                  "subset index out of range in \"" + key + "\"", key);
    }
    const int index = std::stoi(item);
    if (index < 1 || index > p) {
      throw Error(ErrorCode::kInvalidParameter,
                  "subset index " + item + " outside [1," + std::to_string(p) +
                      "]",
                  key);
    }
    mask |= SubsetMask{1} << (index - 1);
  }
  return mask;
}

PointSet::PointSet(int p, std::vector<LatticePoint> points)
    : p_(p), points_(std::move(points)) {
  for (const auto& n : points_) {
    if (static_cast<int>(n.size()) != p_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "point " + PointToString(n) + " does not have " +
                      std::to_string(p_) + " coordinates",
                  PointToString(n));
    }
    if (std::any_of(n.begin(), n.end(), [](int v) { return v < 0; })) {
      throw Error(ErrorCode::kInvalidParameter,
                  "point " + PointToString(n) + " has a negative coordinate",
                  PointToString(n));
    }
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(std::span<const int> n) const {
  if (static_cast<int>(n.size()) != p_) return false;
  auto it = std::lower_bound(
      points_.begin(), points_.end(), n,
      [](const LatticePoint& a, std::span<const int> b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                            b.end());
      });
  return it != points_.end() && std::equal(it->begin(), it->end(), n.begin());
}

LatticePoint PointSet::Max() const {
  LatticePoint m(p_, 0);
  for (const auto& n : points_) {
    for (int i = 0; i < p_; ++i) m[i] = std::max(m[i], n[i]);
  }
  return m;
}

bool IsMConvex(const PointSet& s) {
  if (s.empty()) return false;
  const int degree = CoordinateSum(s[0]);
  for (const auto& n : s) {
    if (CoordinateSum(n) != degree) return false;
  }
  const int p = s.p();
  LatticePoint moved(p);
  for (const auto& a : s) {
    for (const auto& b : s) {
      for (int i = 0; i < p; ++i) {
        if (a[i] <= b[i]) continue;
        bool exchanged = false;
        for (int j = 0; j < p && !exchanged; ++j) {
          if (a[j] >= b[j]) continue;
          moved = a;
          --moved[i];
          ++moved[j];
          exchanged = s.contains(moved);
        }
        if (!exchanged) return false;
      }
    }
  }
  return true;
}

PointSet TranslateMinus(const PointSet& s, std::span<const int> b) {
  if (static_cast<int>(b.size()) != s.p()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "offset has the wrong number of coordinates", PointToString(b));
  }
  std::vector<LatticePoint> out;
  for (const auto& n : s) {
    if (!LessEqual(b, n)) continue;
    LatticePoint shifted = n;
    for (int i = 0; i < s.p(); ++i) shifted[i] -= b[i];
    out.push_back(std::move(shifted));
  }
  return PointSet(s.p(), std::move(out));
}

PointSet Truncate(const PointSet& s, std::span<const int> b) {
  if (static_cast<int>(b.size()) != s.p()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "offset has the wrong number of coordinates", PointToString(b));
  }
  std::vector<LatticePoint> out;
  for (const auto& n : s) {
    if (LessEqual(b, n)) out.push_back(n);
  }
  return PointSet(s.p(), std::move(out));
}

}  // namespace polymat

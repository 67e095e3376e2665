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

#include "polymat/linalg.h"

#include <utility>

namespace polymat {

int MatrixRank(IntegerMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  Integer prev_pivot = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) /
                  prev_pivot;
      }
      m[r][col] = 0;
    }
    prev_pivot = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

int MatrixRank(const std::vector<std::vector<Rational>>& m) {
  IntegerMatrix scaled;
  scaled.reserve(m.size());
  for (const auto& row : m) {
    Integer lcm = 1;
    for (const auto& q : row) {
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(q));
    }
    std::vector<Integer> out;
    out.reserve(row.size());
    for (const auto& q : row) {
      out.push_back(boost::multiprecision::numerator(q) *
                    (lcm / boost::multiprecision::denominator(q)));
    }
    scaled.push_back(std::move(out));
  }
  return MatrixRank(std::move(scaled));
}

}  // namespace polymat

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

#include "polymat/lorentzian.h"

#include <algorithm>
#include <sstream>
#include <thread>

#include "polymat/error.h"
#include "polymat/point_set.h"

namespace polymat {
namespace {

struct Derivative {
  std::vector<int> variables;  // nondecreasing multiset
  SparsePoly quadratic;
};

void CollectDerivatives(const SparsePoly& f, int order, int start,
                        std::vector<int>& prefix,
                        std::vector<Derivative>& out) {
  if (f.is_zero()) return;
  if (order == 0) {
    out.push_back({prefix, f});
    return;
  }
  for (int v = start; v < f.nvars(); ++v) {
    prefix.push_back(v);
    CollectDerivatives(PartialDerivative(f, v), order - 1, v, prefix, out);
    prefix.pop_back();
  }
}

std::string MultisetString(const std::vector<int>& variables) {
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < variables.size(); ++k) {
    if (k) out << ',';
    out << variables[k];
  }
  out << '}';
  return out.str();
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(
    const std::vector<std::vector<Rational>>& rows)
    : n_(static_cast<int>(rows.size())) {
  entries_.reserve(static_cast<std::size_t>(n_) * n_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) {
      throw Error(ErrorCode::kDimensionMismatch, "matrix is not square");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw Error(ErrorCode::kNotSymmetric,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") differs from its transpose",
                    std::to_string(i) + "," + std::to_string(j));
      }
    }
  }
}

SymmetricMatrix SymmetricMatrix::operator-() const {
  std::vector<Rational> negated = entries_;
  for (auto& q : negated) q = -q;
  return SymmetricMatrix(n_, std::move(negated));
}

// Faddeev-LeVerrier: M_k = H M_{k-1} + c_{k-1} I, c_k = -tr(H M_k) / k.
std::vector<Rational> CharacteristicPolynomial(const SymmetricMatrix& h) {
  const int n = h.size();
  std::vector<Rational> coeffs(n + 1, 0);
  coeffs[0] = 1;
  std::vector<Rational> m(static_cast<std::size_t>(n) * n, 0);
  std::vector<Rational> hm(static_cast<std::size_t>(n) * n, 0);
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Rational sum = 0;
        for (int l = 0; l < n; ++l) sum += h(i, l) * m[l * n + j];
        hm[i * n + j] = sum;
      }
    }
    for (int i = 0; i < n; ++i) hm[i * n + i] += coeffs[k - 1];
    m.swap(hm);
    Rational trace = 0;
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l < n; ++l) trace += h(i, l) * m[l * n + i];
    }
    coeffs[k] = -trace / k;
  }
  return coeffs;
}

int PositiveEigenvalueCount(const SymmetricMatrix& h) {
  int changes = 0;
  int last_sign = 0;
  for (const auto& c : CharacteristicPolynomial(h)) {
    const int sign = c > 0 ? 1 : (c < 0 ? -1 : 0);
    if (sign == 0) continue;
    if (last_sign != 0 && sign != last_sign) ++changes;
    last_sign = sign;
  }
  return changes;
}

SymmetricMatrix QuadraticHessian(const SparsePoly& q) {
  const int n = q.nvars();
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, 0));
  for (const auto& [exp, c] : q.terms()) {
    if (CoordinateSum(exp) != 2) continue;
    std::vector<int> vars;
    for (int v = 0; v < n; ++v) {
      for (int e = 0; e < exp[v]; ++e) vars.push_back(v);
    }
    if (vars[0] == vars[1]) {
      rows[vars[0]][vars[0]] += 2 * c;
    } else {
      rows[vars[0]][vars[1]] += c;
      rows[vars[1]][vars[0]] += c;
    }
  }
  return SymmetricMatrix(rows);
}

LorentzianVerdict IsLorentzian(const SparsePoly& f, int threads) {
  if (f.is_zero()) {
    throw Error(ErrorCode::kZeroPolynomial,
                "the zero polynomial has no Lorentzian verdict");
  }
  const int d = f.degree();
  for (const auto& [exp, c] : f.terms()) {
    if (CoordinateSum(exp) != d) {
      return {false, "not homogeneous: term " + FormatMonomial(exp, "t", 0) +
                         " has degree " + std::to_string(CoordinateSum(exp)) +
                         ", expected " + std::to_string(d)};
    }
  }
  for (const auto& [exp, c] : f.terms()) {
    if (c < 0) {
      return {false, "negative coefficient " + RationalToString(c) + " at " +
                         FormatMonomial(exp, "t", 0)};
    }
  }
  if (!IsMConvex(Support(f))) {
    return {false, "support is not M-convex"};
  }
  if (d <= 1) return {true, ""};

  std::vector<Derivative> derivatives;
  std::vector<int> prefix;
  CollectDerivatives(f, d - 2, 0, prefix, derivatives);

  std::vector<int> positive(derivatives.size(), 0);
  threads = std::max(1, std::min<int>(threads,
                                      static_cast<int>(derivatives.size())));
  auto work = [&](int worker) {
    for (std::size_t k = worker; k < derivatives.size(); k += threads) {
      positive[k] =
          PositiveEigenvalueCount(QuadraticHessian(derivatives[k].quadratic));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  for (std::size_t k = 0; k < derivatives.size(); ++k) {
    if (positive[k] > 1) {
      return {false, "Hessian of the derivative along variables " +
                         MultisetString(derivatives[k].variables) + " has " +
                         std::to_string(positive[k]) + " positive eigenvalues"};
    }
  }
  return {true, ""};
}

LorentzianVerdict IsDenormalizedLorentzian(const SparsePoly& f, int threads) {
  if (f.is_zero()) {
    throw Error(ErrorCode::kZeroPolynomial,
                "the zero polynomial has no Lorentzian verdict");
  }
  return IsLorentzian(Normalize(f), threads);
}

SparsePoly SignChange(const SparsePoly& f) {
  if (f.is_zero()) {
    throw Error(ErrorCode::kZeroPolynomial, "cannot sign-change 0");
  }
  const int d = f.degree();
  SparsePoly out(f.nvars());
  for (const auto& [exp, c] : f.terms()) {
    out.AddTerm(exp, (d - CoordinateSum(exp)) % 2 == 0 ? c : Rational(-c));
  }
  return out;
}

LorentzianVerdict CheckSignChangedHomogenization(const SparsePoly& f,
                                                 int threads) {
  return IsDenormalizedLorentzian(Homogenize(SignChange(f)), threads);
}

}  // namespace polymat

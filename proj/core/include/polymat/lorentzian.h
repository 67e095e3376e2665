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

#ifndef POLYMAT_LORENTZIAN_H_
#define POLYMAT_LORENTZIAN_H_

#include <string>
#include <vector>

#include "polymat/rational.h"
#include "polymat/sparse_poly.h"

namespace polymat {

class SymmetricMatrix {
 public:
  // Throws DimensionMismatch for non-square input and NotSymmetric when
  // rows[i][j] != rows[j][i].
  explicit SymmetricMatrix(const std::vector<std::vector<Rational>>& rows);

  int size() const { return n_; }
  const Rational& operator()(int i, int j) const { return entries_[i * n_ + j]; }

  SymmetricMatrix operator-() const;

 private:
  SymmetricMatrix(int n, std::vector<Rational> entries)
      : n_(n), entries_(std::move(entries)) {}

  int n_;
  std::vector<Rational> entries_;
};

// Coefficients of det(x I - H), leading coefficient first.
std::vector<Rational> CharacteristicPolynomial(const SymmetricMatrix& h);

// Number of strictly positive eigenvalues. The characteristic polynomial of
// a symmetric matrix is real-rooted, so Descartes' rule of signs is exact.
int PositiveEigenvalueCount(const SymmetricMatrix& h);

// Hessian of a polynomial of degree at most two (its second-order part).
SymmetricMatrix QuadraticHessian(const SparsePoly& q);

struct LorentzianVerdict {
  bool lorentzian = false;
  // Empty on success; otherwise names the first failing condition and its
  // witness.
  std::string diagnostic;
};

// Homogeneous, nonnegative coefficients, M-convex support, and every
// derivative of order deg - 2 has a Hessian with at most one positive
// eigenvalue. `threads` workers share the Hessian checks.
// Throws ZeroPolynomial.
LorentzianVerdict IsLorentzian(const SparsePoly& f, int threads = 1);

// IsLorentzian(Normalize(f)).
LorentzianVerdict IsDenormalizedLorentzian(const SparsePoly& f,
                                           int threads = 1);

// c t^n -> (-1)^(deg f - |n|) c t^n. Throws ZeroPolynomial.
SparsePoly SignChange(const SparsePoly& f);

// sign change, homogenize, denormalized Lorentzian check.
LorentzianVerdict CheckSignChangedHomogenization(const SparsePoly& f,
                                                 int threads = 1);

}  // namespace polymat

#endif  // POLYMAT_LORENTZIAN_H_

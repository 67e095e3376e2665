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

#ifndef POLYMAT_ERROR_H_
#define POLYMAT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace polymat {

enum class ErrorCode {
  kMissingSubset,
  kAxiomViolation,
  kCageTooSmall,
  kDimensionMismatch,
  kNotMConvex,
  kInvalidParameter,
  kNegativeExponent,
  kZeroPolynomial,
  kEmptyIdeal,
  kNotSymmetric,
  kEmptyPiece,
  kRelationInvalid,
  kUnknownFixture,
  kMalformedInput,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as this exception. `witness` carries a short
// machine-readable description of the offending object (a subset key, a
// lattice point, an exponent vector), or is empty.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const { return code_; }
  const std::string& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

}  // namespace polymat

#endif  // POLYMAT_ERROR_H_

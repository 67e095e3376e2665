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

#include "polymat/error.h"

namespace polymat {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingSubset: return "MissingSubset";
    case ErrorCode::kAxiomViolation: return "AxiomViolation";
    case ErrorCode::kCageTooSmall: return "CageTooSmall";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotMConvex: return "NotMConvex";
    case ErrorCode::kInvalidParameter: return "InvalidParameter";
    case ErrorCode::kNegativeExponent: return "NegativeExponent";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kEmptyIdeal: return "EmptyIdeal";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kEmptyPiece: return "EmptyPiece";
    case ErrorCode::kRelationInvalid: return "RelationInvalid";
    case ErrorCode::kUnknownFixture: return "UnknownFixture";
    case ErrorCode::kMalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace polymat

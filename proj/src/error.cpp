// Copyright 2026 The latpoly Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "latpoly/error.hpp"

#include <numeric>

#include "latpoly/checked.hpp"

namespace latpoly {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kTooFewVertices: return "too-few-vertices";
    case ErrorCode::kRepeatedVertex: return "repeated-vertex";
    case ErrorCode::kCollinear: return "collinear";
    case ErrorCode::kNotConvex: return "not-convex";
    case ErrorCode::kNotReflexive: return "not-reflexive";
    case ErrorCode::kInternalInconsistency: return "internal-inconsistency";
    case ErrorCode::kZeroVector: return "zero-vector";
    case ErrorCode::kIndexOutOfRange: return "index-out-of-range";
    case ErrorCode::kInvalidOperation: return "invalid-operation";
    case ErrorCode::kInvalidMap: return "invalid-map";
    case ErrorCode::kProofContractViolation: return "proof-contract-violation";
    case ErrorCode::kParse: return "parse";
  }
  return "unknown";
}

NotReflexiveError::NotReflexiveError(long long interior_points)
    : Error(ErrorCode::kNotReflexive,
            "not reflexive: interior points: " + std::to_string(interior_points)),
      interior_points_(interior_points) {}

ParseError::ParseError(int line, const std::string& message)
    : Error(ErrorCode::kParse,
            "parse error at line " + std::to_string(line) + ": " + message),
      line_(line) {}

Int gcd_abs(Int a, Int b) { return std::gcd(checked_abs(a), checked_abs(b)); }

}  // namespace latpoly

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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latpoly {

enum class ErrorCode {
  kOverflow,
  kTooFewVertices,
  kRepeatedVertex,
  kCollinear,
  kNotConvex,
  kNotReflexive,
  kInternalInconsistency,
  kZeroVector,
  kIndexOutOfRange,
  kInvalidOperation,
  kInvalidMap,
  kProofContractViolation,
  kParse,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by validate_reflexive; remembers how many interior points it found.
class NotReflexiveError : public Error {
 public:
  explicit NotReflexiveError(long long interior_points);

  long long interior_points() const noexcept { return interior_points_; }

 private:
  long long interior_points_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message);

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace latpoly

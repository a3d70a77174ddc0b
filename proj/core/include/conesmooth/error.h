// Copyright 2026 The Conesmooth Authors.
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conesmooth {

enum class ErrorCode {
  kMalformedDocument,
  kNonPositiveLength,
  kTriangleInequalityViolation,
  kNonManifoldEdge,
  kBadVertexLink,
  kDisconnectedSurface,
  kNonTriangularFace,
  kVertexNotInFace,
  kUnknownVertex,
  kNonPositiveArgument,
  kInvalidArgument,
  kKernelInvariantViolation,
  kBoundViolation,
  kOutOfDomain,
  kStepTooLarge,
  kQuadratureFailure,
  kDegenerateTriangle,
  kInvalidSurface,
  kBoundaryNotSupported,
  kBadWeights,
  kNotPositiveDefinite,
};

/// Stable identifier used in diagnostics, e.g. "NonManifoldEdge".
std::string_view ErrorCodeName(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code and a
/// message naming the offending element.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace conesmooth

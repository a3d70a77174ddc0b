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

#include "conesmooth/error.h"

namespace conesmooth {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedDocument: return "MalformedDocument";
    case ErrorCode::kNonPositiveLength: return "NonPositiveLength";
    case ErrorCode::kTriangleInequalityViolation: return "TriangleInequalityViolation";
    case ErrorCode::kNonManifoldEdge: return "NonManifoldEdge";
    case ErrorCode::kBadVertexLink: return "BadVertexLink";
    case ErrorCode::kDisconnectedSurface: return "DisconnectedSurface";
    case ErrorCode::kNonTriangularFace: return "NonTriangularFace";
    case ErrorCode::kVertexNotInFace: return "VertexNotInFace";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kNonPositiveArgument: return "NonPositiveArgument";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kKernelInvariantViolation: return "KernelInvariantViolation";
    case ErrorCode::kBoundViolation: return "BoundViolation";
    case ErrorCode::kOutOfDomain: return "OutOfDomain";
    case ErrorCode::kStepTooLarge: return "StepTooLarge";
    case ErrorCode::kQuadratureFailure: return "QuadratureFailure";
    case ErrorCode::kDegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::kInvalidSurface: return "InvalidSurface";
    case ErrorCode::kBoundaryNotSupported: return "BoundaryNotSupported";
    case ErrorCode::kBadWeights: return "BadWeights";
    case ErrorCode::kNotPositiveDefinite: return "NotPositiveDefinite";
  }
  return "Unknown";
}

}  // namespace conesmooth

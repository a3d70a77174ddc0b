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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conesmooth/mesh.h"

namespace conesmooth {

/// Side lengths of a flat triangle with corners P0, P1, P2:
/// a = |P0P1|, b = |P1P2|, c = |P2P0|.
struct TriangleShape {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Throws DegenerateTriangle unless the lengths are positive and satisfy the
/// strict triangle inequality (relative slack 1e-12).
void RequireNondegenerate(const TriangleShape& shape);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// (0, 0), (a, 0) and the apex above the x axis.
std::array<Point2, 3> PlaneEmbedding(const TriangleShape& shape);

struct SingularValues {
  double major = 0.0;
  double minor = 0.0;
};

/// Singular values of the linear map taking the embedded triangle (P0 at the
/// origin) onto the equilateral triangle of side `target_side`, with Pi sent
/// to the i-th corner of the target.
SingularValues AffineSingularValues(const TriangleShape& shape, double target_side);

/// Optimal bi-Lipschitz constant max(major, 1/minor) of that linear map.
double SimplexBilipConstant(const TriangleShape& shape, double target_side);

/// Closed range of target sides r with SimplexBilipConstant(shape, r) <= M.
struct ScaleInterval {
  double lower = 0.0;
  double upper = 0.0;

  bool empty() const;
};

ScaleInterval FeasibleScales(const TriangleShape& shape, int M);

enum class CertificationMode { kLipschitz, kQuasiconformal, kAngleHypothesis, kAngleObstruction };

const char* ModeName(CertificationMode mode);

struct VertexVerdict {
  VertexId vertex;
  bool pass = true;
  bool boundary = false;
  /// Incident faces alone, and faces + edges + the vertex itself.
  std::size_t face_count = 0;
  std::size_t simplex_count = 0;
  /// Quasiconformal mode: intersection of the feasible scales of the star.
  std::optional<ScaleInterval> scale_interval;
  /// Angle modes.
  std::optional<double> cone_angle;
  /// Empty on pass.
  std::string witness;
};

struct FaceVerdict {
  FaceIndex face = 0;
  bool pass = true;
  /// Target side used: 1 for Lipschitz, the optimal side otherwise.
  double scale = 1.0;
  double bilip_constant = 1.0;
  std::string witness;
};

struct CertificationReport {
  CertificationMode mode = CertificationMode::kLipschitz;
  /// M for the simplex modes, K for the angle modes.
  double parameter = 0.0;
  bool pass = true;
  std::vector<VertexVerdict> vertices;  // ascending vertex id
  std::vector<FaceVerdict> faces;       // ascending face index
  std::optional<int> minimal_m;
  /// Angle modes: closed window [lower, upper] in radians.
  std::optional<std::array<double, 2>> window;
};

/// Every point lies in at most M closed simplices and every face is linearly
/// M-bi-Lipschitz to the unit equilateral triangle.
CertificationReport CertifyLipschitz(const PolyhedralSurface& surface, int M);

/// Every point lies in at most M closed simplices and, per vertex, some common
/// side r makes every face of the star M-bi-Lipschitz to the equilateral
/// triangle of side r.
CertificationReport CertifyQuasiconformal(const PolyhedralSurface& surface, int M);

/// Smallest M that certifies in `mode` (kLipschitz or kQuasiconformal).
int MinimalM(const PolyhedralSurface& surface, CertificationMode mode);

struct AngleWindow {
  double lower = 0.0;
  double upper = 0.0;
};

/// [2pi/K, 2pi K].
AngleWindow HypothesisWindow(double K);
/// [2pi/K^2, 2pi K^2].
AngleWindow ObstructionWindow(double K);

/// Relative slack applied at both window ends.
inline constexpr double kAngleWindowSlack = 1e-12;

bool AngleInWindow(double angle, const AngleWindow& window);

/// Every interior cone angle lies in the window selected by `mode`
/// (kAngleHypothesis or kAngleObstruction). Boundary vertices are reported
/// but not judged.
CertificationReport AngleWindowCheck(const PolyhedralSurface& surface, double K,
                                     CertificationMode mode);

}  // namespace conesmooth

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

#include "conesmooth/certify.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "conesmooth/error.h"

namespace conesmooth {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Relative padding for comparisons against M and at interval endpoints.
constexpr double kEndpointPad = 1e-12;

std::string Num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

bool AtMost(double value, double bound) { return value <= bound * (1.0 + kEndpointPad); }

TriangleShape FaceShape(const PolyhedralSurface& surface, FaceIndex f) {
  const auto [l01, l12, l20] = surface.face_lengths(f);
  return {l01, l12, l20};
}

// Per-surface quantities that do not depend on M.
struct StarTable {
  std::vector<VertexId> vertices;
  std::vector<std::size_t> face_count;
  std::vector<std::size_t> simplex_count;
  std::vector<bool> boundary;
  std::vector<std::vector<FaceIndex>> star;
  std::vector<SingularValues> unit_sv;  // per face, target side 1
};

StarTable Tabulate(const PolyhedralSurface& surface) {
  StarTable t;
  for (VertexId v : surface.vertices()) {
    const auto faces = surface.incident_faces(v);
    t.vertices.push_back(v);
    t.face_count.push_back(faces.size());
    // Closed simplices containing v: its faces, its edges, and v itself.
    t.simplex_count.push_back(faces.size() + surface.vertex_degree(v) + 1);
    t.boundary.push_back(surface.is_boundary_vertex(v));
    t.star.emplace_back(faces.begin(), faces.end());
  }
  t.unit_sv.reserve(surface.num_faces());
  for (FaceIndex f = 0; f < surface.num_faces(); ++f) {
    t.unit_sv.push_back(AffineSingularValues(FaceShape(surface, f), 1.0));
  }
  return t;
}

ScaleInterval ScalesFromUnit(const SingularValues& unit, int M) {
  // The map to side r is r times the map to side 1, so its constant is
  // max(r * major, 1 / (r * minor)).
  return {1.0 / (M * unit.minor), M / unit.major};
}

// Points other than vertices need no separate check. An interior point of
// an edge uv lies in that edge and its (at most two) faces, all of which
// also contain u, so its simplex count is below u's and any scale feasible
// for u's star is feasible for it. Interior points of faces likewise.
CertificationReport Evaluate(const StarTable& t, int M, CertificationMode mode, bool detailed) {
  CertificationReport report;
  report.mode = mode;
  report.parameter = M;
  const bool lipschitz = mode == CertificationMode::kLipschitz;

  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    VertexVerdict v;
    v.vertex = t.vertices[i];
    v.boundary = t.boundary[i];
    v.face_count = t.face_count[i];
    v.simplex_count = t.simplex_count[i];
    if (v.simplex_count > static_cast<std::size_t>(M)) {
      v.pass = false;
      if (detailed) {
        v.witness = "vertex " + ToString(v.vertex) + " lies in " + std::to_string(v.simplex_count) +
                    " simplices, more than M = " + std::to_string(M);
      }
    }
    if (!lipschitz) {
      ScaleInterval common{0.0, std::numeric_limits<double>::infinity()};
      for (FaceIndex f : t.star[i]) {
        const ScaleInterval s = ScalesFromUnit(t.unit_sv[f], M);
        common.lower = std::max(common.lower, s.lower);
        common.upper = std::min(common.upper, s.upper);
      }
      v.scale_interval = common;
      if (common.empty()) {
        if (v.pass && detailed) {
          v.witness = "no common scale for the star of vertex " + ToString(v.vertex) +
                      ": lower end " + Num(common.lower) + " exceeds upper end " +
                      Num(common.upper);
        }
        v.pass = false;
      }
    }
    report.pass = report.pass && v.pass;
    if (!detailed && !report.pass) return report;
    if (detailed) report.vertices.push_back(std::move(v));
  }

  for (FaceIndex f = 0; f < t.unit_sv.size(); ++f) {
    const SingularValues& sv = t.unit_sv[f];
    FaceVerdict fv;
    fv.face = f;
    if (lipschitz) {
      fv.scale = 1.0;
      fv.bilip_constant = std::max(sv.major, 1.0 / sv.minor);
    } else {
      fv.scale = 1.0 / std::sqrt(sv.major * sv.minor);
      fv.bilip_constant = std::sqrt(sv.major / sv.minor);
    }
    fv.pass = AtMost(fv.bilip_constant, M);
    if (!fv.pass && detailed) {
      fv.witness = "face " + std::to_string(f) + " has bi-Lipschitz constant " +
                   Num(fv.bilip_constant) + " at side " + Num(fv.scale) + ", more than M = " +
                   std::to_string(M);
    }
    report.pass = report.pass && fv.pass;
    if (!detailed && !report.pass) return report;
    if (detailed) report.faces.push_back(std::move(fv));
  }
  return report;
}

void RequireM(int M) {
  if (M < 1) throw Error(ErrorCode::kInvalidArgument, "M must be a positive integer");
}

}  // namespace

void RequireNondegenerate(const TriangleShape& s) {
  const double scale = std::max({s.a, s.b, s.c});
  const double slack = 1e-12 * scale;
  if (!(s.a > 0.0 && s.b > 0.0 && s.c > 0.0) || !std::isfinite(scale) ||
      !(s.a + s.b - s.c > slack && s.b + s.c - s.a > slack && s.c + s.a - s.b > slack)) {
    throw Error(ErrorCode::kDegenerateTriangle, "triangle (" + Num(s.a) + ", " + Num(s.b) + ", " +
                                                    Num(s.c) + ") is degenerate");
  }
}

std::array<Point2, 3> PlaneEmbedding(const TriangleShape& s) {
  RequireNondegenerate(s);
  const double x = (s.a * s.a + s.c * s.c - s.b * s.b) / (2.0 * s.a);
  return {Point2{0.0, 0.0}, Point2{s.a, 0.0}, Point2{x, TriangleHeight(s.b, s.c, s.a)}};
}

SingularValues AffineSingularValues(const TriangleShape& shape, double target_side) {
  if (!(target_side > 0.0)) {
    throw Error(ErrorCode::kNonPositiveArgument, "target side must be positive");
  }
  const auto p = PlaneEmbedding(shape);
  const double a = p[1].x, x = p[2].x, y = p[2].y;
  // A maps (a, 0) -> (r, 0) and (x, y) -> (r/2, r sqrt(3)/2); upper triangular.
  const double r = target_side;
  const double m00 = r / a;
  const double m01 = r * (0.5 - x / a) / y;
  const double m11 = r * (std::numbers::sqrt3 / 2.0) / y;
  const double e = 0.5 * (m00 + m11);
  const double f = 0.5 * (m00 - m11);
  const double g = 0.5 * m01;
  const double q = std::hypot(e, g);
  const double w = std::hypot(f, g);
  const double major = q + w;
  return {major, std::abs(m00 * m11) / major};
}

double SimplexBilipConstant(const TriangleShape& shape, double target_side) {
  const SingularValues sv = AffineSingularValues(shape, target_side);
  return std::max(sv.major, 1.0 / sv.minor);
}

bool ScaleInterval::empty() const { return lower > upper * (1.0 + kEndpointPad); }

ScaleInterval FeasibleScales(const TriangleShape& shape, int M) {
  RequireM(M);
  return ScalesFromUnit(AffineSingularValues(shape, 1.0), M);
}

const char* ModeName(CertificationMode mode) {
  switch (mode) {
    case CertificationMode::kLipschitz: return "lipschitz";
    case CertificationMode::kQuasiconformal: return "quasiconformal";
    case CertificationMode::kAngleHypothesis: return "hypothesis";
    case CertificationMode::kAngleObstruction: return "obstruction";
  }
  return "unknown";
}

CertificationReport CertifyLipschitz(const PolyhedralSurface& surface, int M) {
  RequireM(M);
  return Evaluate(Tabulate(surface), M, CertificationMode::kLipschitz, true);
}

CertificationReport CertifyQuasiconformal(const PolyhedralSurface& surface, int M) {
  RequireM(M);
  return Evaluate(Tabulate(surface), M, CertificationMode::kQuasiconformal, true);
}

int MinimalM(const PolyhedralSurface& surface, CertificationMode mode) {
  if (mode != CertificationMode::kLipschitz && mode != CertificationMode::kQuasiconformal) {
    throw Error(ErrorCode::kInvalidArgument, "minimal M is defined for lipschitz and quasiconformal");
  }
  const StarTable table = Tabulate(surface);
  auto passes = [&](int M) { return Evaluate(table, M, mode, false).pass; };
  constexpr int kCeiling = 1 << 30;
  int hi = 1;
  while (!passes(hi)) {
    if (hi >= kCeiling) {
      throw Error(ErrorCode::kInvalidArgument, "no M below 2^30 certifies the surface");
    }
    hi *= 2;
  }
  int lo = hi / 2;  // fails, or 0 when hi == 1
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (passes(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

AngleWindow HypothesisWindow(double K) {
  if (!(K >= 1.0)) throw Error(ErrorCode::kInvalidArgument, "K must be at least 1, got " + Num(K));
  return {kTwoPi / K, kTwoPi * K};
}

AngleWindow ObstructionWindow(double K) {
  if (!(K >= 1.0)) throw Error(ErrorCode::kInvalidArgument, "K must be at least 1, got " + Num(K));
  return {kTwoPi / (K * K), kTwoPi * K * K};
}

bool AngleInWindow(double angle, const AngleWindow& window) {
  return angle >= window.lower * (1.0 - kAngleWindowSlack) &&
         angle <= window.upper * (1.0 + kAngleWindowSlack);
}

CertificationReport AngleWindowCheck(const PolyhedralSurface& surface, double K,
                                     CertificationMode mode) {
  AngleWindow window;
  if (mode == CertificationMode::kAngleHypothesis) {
    window = HypothesisWindow(K);
  } else if (mode == CertificationMode::kAngleObstruction) {
    window = ObstructionWindow(K);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "angle window check needs hypothesis or obstruction");
  }
  CertificationReport report;
  report.mode = mode;
  report.parameter = K;
  report.window = std::array<double, 2>{window.lower, window.upper};
  for (VertexId v : surface.vertices()) {
    const ConeAngle angle = VertexConeAngle(surface, v);
    VertexVerdict verdict;
    verdict.vertex = v;
    verdict.boundary = angle.boundary;
    verdict.face_count = surface.incident_faces(v).size();
    verdict.simplex_count = verdict.face_count + surface.vertex_degree(v) + 1;
    verdict.cone_angle = angle.radians;
    if (!angle.boundary && !AngleInWindow(angle.radians, window)) {
      verdict.pass = false;
      verdict.witness = "vertex " + ToString(v) + " has cone angle " + Num(angle.radians) +
                        " outside [" + Num(window.lower) + ", " + Num(window.upper) + "]";
      report.pass = false;
    }
    report.vertices.push_back(std::move(verdict));
  }
  return report;
}

}  // namespace conesmooth

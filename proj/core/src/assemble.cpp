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

#include "conesmooth/assemble.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <string>

#include "conesmooth/error.h"

namespace conesmooth {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// r_i = rho * 10^(-4 (n - i) / n), i = 1..n.
double GridRadius(double rho, std::size_t i, std::size_t n) {
  return rho * std::pow(10.0, -4.0 * static_cast<double>(n - i) / static_cast<double>(n));
}

double GoldenMaximum(const auto& f, double lo, double hi, double& best_x) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 80 && b - a > 1e-15 * b; ++it) {
    if (f1 < f2) {
      a = x1, x1 = x2, f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2, x2 = x1, f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  if (f1 >= f2) {
    best_x = x1;
    return f1;
  }
  best_x = x2;
  return f2;
}

}  // namespace

const SmoothedCone& SmoothedSurface::cone(VertexId v) const {
  auto it = cones_.find(v);
  if (it == cones_.end()) throw Error(ErrorCode::kUnknownVertex, "unknown vertex " + ToString(v));
  return it->second;
}

SmoothedSurface SmoothSurface(const PolyhedralSurface& surface,
                              std::shared_ptr<const SmoothingKernel> kernel) {
  if (!surface.is_closed()) {
    for (VertexId v : surface.vertices()) {
      if (surface.is_boundary_vertex(v)) {
        throw Error(ErrorCode::kBoundaryNotSupported,
                    "vertex " + ToString(v) + " is on the boundary; only closed surfaces can be smoothed");
      }
    }
  }
  SmoothedSurface out;
  out.base_ = std::make_shared<const PolyhedralSurface>(surface);
  for (VertexId v : surface.vertices()) {
    const double alpha = VertexConeAngle(surface, v).radians;
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
      throw Error(ErrorCode::kInvalidSurface, "vertex " + ToString(v) + " has an invalid cone angle");
    }
    const SmoothedCone& cone =
        out.cones_.emplace(v, SmoothedCone(alpha, SafeRadius(surface, v), kernel)).first->second;
    const double ratio = cone.angle_ratio();
    out.k_hyp_excess_ = std::max({out.k_hyp_excess_, ratio - 1.0, (1.0 - ratio) / ratio});
  }
  out.l_bound_ = MinVertexSeparation(surface);
  return out;
}

double CurvatureBound(double k_excess, double l) {
  return 512.0 * (1.0 + k_excess) * k_excess / (l * l);
}

CurvatureSup SampledCurvatureSup(const SmoothedCone& cone, std::size_t grid) {
  if (grid < 3) throw Error(ErrorCode::kInvalidArgument, "curvature grid needs at least 3 points");
  auto magnitude = [&cone](double r) { return std::abs(CurvatureClosedForm(cone, r)); };
  std::vector<double> radii(grid), values(grid);
  for (std::size_t i = 0; i < grid; ++i) {
    radii[i] = GridRadius(cone.rho(), i + 1, grid);
    values[i] = magnitude(radii[i]);
  }
  CurvatureSup sup;
  for (std::size_t i = 0; i < grid; ++i) {
    if (values[i] > sup.value) sup = {values[i], radii[i]};
    const bool left_ok = i == 0 || values[i] >= values[i - 1];
    const bool right_ok = i + 1 == grid || values[i] >= values[i + 1];
    if (values[i] > 0.0 && left_ok && right_ok) {
      double x = radii[i];
      const double lo = radii[i == 0 ? 0 : i - 1];
      const double hi = radii[i + 1 == grid ? i : i + 1];
      const double refined = GoldenMaximum(magnitude, lo, hi, x);
      if (refined > sup.value) sup = {refined, x};
    }
  }
  return sup;
}

VerificationReport GlobalVerification(const SmoothedSurface& smoothed,
                                      const VerificationOptions& options) {
  VerificationReport report;
  report.k_hyp = smoothed.k_hyp();
  report.l_bound = smoothed.l_bound();
  report.curvature_bound = CurvatureBound(smoothed.k_hyp_excess(), smoothed.l_bound());

  for (const auto& [vertex, cone] : smoothed.cones()) {
    ConeVerification c;
    c.vertex = vertex;
    c.alpha = cone.alpha();
    c.rho = cone.rho();
    const CurvatureSup sup = SampledCurvatureSup(cone, options.grid);
    c.curvature_sup = sup.value;
    c.curvature_sup_radius = sup.radius;
    c.distortion = DistortionToCone(cone);
    c.total_curvature = TotalCurvature(cone, options.quadrature_tol);
    c.gauss_bonnet_residual = std::abs(c.total_curvature - (kTwoPi - cone.alpha()));

    report.curvature_sup = std::max(report.curvature_sup, c.curvature_sup);
    report.distortion_max = std::max(report.distortion_max, c.distortion);
    report.gauss_bonnet_max_residual =
        std::max(report.gauss_bonnet_max_residual, c.gauss_bonnet_residual);
    report.cones.push_back(c);
  }
  report.curvature_pass = report.curvature_sup <= report.curvature_bound;
  report.distortion_pass = report.distortion_max <= report.k_hyp * (1.0 + 1e-12);
  report.gauss_bonnet_pass = report.gauss_bonnet_max_residual <= options.quadrature_tol;

  const PolyhedralSurface& base = smoothed.base();
  report.euler_characteristic = base.euler_characteristic();
  report.total_defect = TotalAngleDefect(base);
  report.defect_target = kTwoPi * static_cast<double>(report.euler_characteristic);
  report.defect_residual = std::abs(report.total_defect - report.defect_target);
  report.defect_pass = report.defect_residual <= options.defect_tol;

  report.pass = report.curvature_pass && report.distortion_pass && report.gauss_bonnet_pass &&
                report.defect_pass;
  return report;
}

QuadraticForm2 BlendForms(std::span<const QuadraticForm2> forms, std::span<const double> weights) {
  if (forms.empty() || forms.size() != weights.size()) {
    throw Error(ErrorCode::kBadWeights, "need one weight per form and at least one form");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] >= 0.0) || !std::isfinite(weights[i])) {
      throw Error(ErrorCode::kBadWeights, "weight " + std::to_string(i) + " is negative or not finite");
    }
    total += weights[i];
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorCode::kBadWeights, "weights sum to " + std::to_string(total) + ", not 1");
  }
  QuadraticForm2 out;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (!forms[i].positive_definite()) {
      throw Error(ErrorCode::kNotPositiveDefinite,
                  "form " + std::to_string(i) + " is not positive definite");
    }
    out.g11 += weights[i] * forms[i].g11;
    out.g12 += weights[i] * forms[i].g12;
    out.g22 += weights[i] * forms[i].g22;
  }
  return out;
}

std::vector<FieldSample> SampleFields(const SmoothedSurface& smoothed, VertexId vertex,
                                      std::size_t count) {
  const SmoothedCone& cone = smoothed.cone(vertex);
  std::vector<FieldSample> rows;
  rows.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    const double r = GridRadius(cone.rho(), i, count);
    const double phi = Phi(cone, r);
    rows.push_back({r, phi, phi * phi, CurvatureClosedForm(cone, r)});
  }
  return rows;
}

std::string WriteFieldCsv(std::span<const FieldSample> samples) {
  std::string out = "r,phi,g_theta_theta,curvature\n";
  char line[128];
  for (const FieldSample& s : samples) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", s.r, s.phi, s.g_theta_theta,
                  s.curvature);
    out += line;
  }
  return out;
}

}  // namespace conesmooth

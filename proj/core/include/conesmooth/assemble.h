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

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "conesmooth/cone.h"
#include "conesmooth/mesh.h"

namespace conesmooth {

/**
 * A closed polyhedral surface with each vertex disk replaced by a smoothed
 * cone. The disks of radius SafeRadius are pairwise disjoint and the smoothed
 * metric equals the flat one on each seam, so the cones together with the
 * flat metric elsewhere form one smooth Riemannian metric.
 */
class SmoothedSurface {
 public:
  const PolyhedralSurface& base() const { return *base_; }
  /// One cone per vertex, keyed by vertex id.
  const std::map<VertexId, SmoothedCone>& cones() const { return cones_; }
  /// Throws UnknownVertex.
  const SmoothedCone& cone(VertexId v) const;

  /// Smallest K >= 1 with every cone angle in [2pi/K, 2pi K].
  double k_hyp() const { return 1.0 + k_hyp_excess_; }
  /// k_hyp() - 1, computed without cancellation.
  double k_hyp_excess() const { return k_hyp_excess_; }
  /// MinVertexSeparation of the base surface.
  double l_bound() const { return l_bound_; }

 private:
  friend SmoothedSurface SmoothSurface(const PolyhedralSurface&,
                                       std::shared_ptr<const SmoothingKernel>);
  SmoothedSurface() = default;

  std::shared_ptr<const PolyhedralSurface> base_;
  std::map<VertexId, SmoothedCone> cones_;
  double k_hyp_excess_ = 0.0;
  double l_bound_ = 0.0;
};

/// Throws BoundaryNotSupported if the surface has boundary vertices.
SmoothedSurface SmoothSurface(const PolyhedralSurface& surface,
                              std::shared_ptr<const SmoothingKernel> kernel = StandardKernel());

/// 2^9 K (K - 1) / l^2, given K - 1 directly.
double CurvatureBound(double k_excess, double l);

struct CurvatureSup {
  double value = 0.0;  // sup |K|
  double radius = 0.0;  // where it is attained
};

/// Sampled sup of |CurvatureClosedForm| over a geometric grid of `grid`
/// radii in (rho 1e-4, rho], with each grid-local maximum refined by
/// golden-section search between its neighbours.
CurvatureSup SampledCurvatureSup(const SmoothedCone& cone, std::size_t grid);

struct VerificationOptions {
  std::size_t grid = 10'000;
  double quadrature_tol = 1e-8;
  /// Allowed |sum of defects - 2pi chi|.
  double defect_tol = 1e-9;
};

struct ConeVerification {
  VertexId vertex;
  double alpha = 0.0;
  double rho = 0.0;
  double curvature_sup = 0.0;
  double curvature_sup_radius = 0.0;
  double distortion = 1.0;
  double total_curvature = 0.0;
  double gauss_bonnet_residual = 0.0;  // |total curvature - (2pi - alpha)|
};

struct VerificationReport {
  double k_hyp = 1.0;
  double l_bound = 0.0;
  double curvature_bound = 0.0;
  double curvature_sup = 0.0;
  bool curvature_pass = true;
  double distortion_max = 1.0;
  bool distortion_pass = true;
  double gauss_bonnet_max_residual = 0.0;
  bool gauss_bonnet_pass = true;
  long euler_characteristic = 0;
  double total_defect = 0.0;
  double defect_target = 0.0;  // 2pi chi
  double defect_residual = 0.0;
  bool defect_pass = true;
  bool pass = true;
  std::vector<ConeVerification> cones;  // ascending vertex id
};

/// Checks curvature bound, distortion bound, per-cone Gauss-Bonnet and the
/// discrete Gauss-Bonnet identity. Propagates QuadratureFailure.
VerificationReport GlobalVerification(const SmoothedSurface& smoothed,
                                      const VerificationOptions& options = {});

/// Symmetric bilinear form g11 dx^2 + 2 g12 dx dy + g22 dy^2.
struct QuadraticForm2 {
  double g11 = 0.0;
  double g12 = 0.0;
  double g22 = 0.0;

  double operator()(double vx, double vy) const { return g11 * vx * vx + 2.0 * g12 * vx * vy + g22 * vy * vy; }
  bool positive_definite() const { return g11 > 0.0 && g11 * g22 - g12 * g12 > 0.0; }
};

/// Convex combination sum_i weights[i] * forms[i]. Its value on any vector
/// lies between the smallest and largest input value on that vector.
/// Throws BadWeights (size mismatch, empty, negative, or sum off 1 by more
/// than 1e-12) and NotPositiveDefinite.
QuadraticForm2 BlendForms(std::span<const QuadraticForm2> forms, std::span<const double> weights);

struct FieldSample {
  double r = 0.0;
  double phi = 0.0;
  double g_theta_theta = 0.0;
  double curvature = 0.0;
};

/// `count` rows on the geometric grid r_i = rho 10^(-4 (count - i) / count),
/// i = 1..count. Throws UnknownVertex.
std::vector<FieldSample> SampleFields(const SmoothedSurface& smoothed, VertexId vertex,
                                      std::size_t count);

/// CSV with header `r,phi,g_theta_theta,curvature`.
std::string WriteFieldCsv(std::span<const FieldSample> samples);

}  // namespace conesmooth

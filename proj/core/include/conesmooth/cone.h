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

#include <memory>

#include "conesmooth/kernel.h"

namespace conesmooth {

struct MetricCoefficients {
  double g_theta_theta = 0.0;
  double g_rr = 0.0;
};

/// The flat cone dr^2 + (alpha r / 2pi)^2 dtheta^2 on a disk.
class ConeMetric {
 public:
  /// Throws NonPositiveArgument unless alpha > 0 and radius > 0.
  ConeMetric(double alpha, double radius);

  double alpha() const { return alpha_; }
  double radius() const { return radius_; }
  /// Throws OutOfDomain for r <= 0.
  MetricCoefficients At(double r) const;

 private:
  double alpha_;
  double radius_;
};

/**
 * Rotationally symmetric metric dr^2 + phi(r)^2 dtheta^2 on the disk of
 * radius rho about a cone point, with
 *
 *   phi(r) = (f(r/rho) (alpha/2pi - 1) + 1) r,
 *
 * so it is Euclidean at the tip and agrees with the cone of angle alpha for
 * r >= rho. The kernel is shared between copies.
 */
class SmoothedCone {
 public:
  /// Uses the standard logistic kernel.
  SmoothedCone(double alpha, double rho);
  SmoothedCone(double alpha, double rho, std::shared_ptr<const SmoothingKernel> kernel);

  double alpha() const { return alpha_; }
  double rho() const { return rho_; }
  /// alpha / 2pi.
  double angle_ratio() const { return ratio_; }
  const SmoothingKernel& kernel() const { return *kernel_; }
  const std::shared_ptr<const SmoothingKernel>& shared_kernel() const { return kernel_; }

 private:
  double alpha_;
  double rho_;
  double ratio_;
  std::shared_ptr<const SmoothingKernel> kernel_;
};

/// Process-wide instance of SmoothingKernel::Standard().
const std::shared_ptr<const SmoothingKernel>& StandardKernel();

/// phi(r); equals (alpha/2pi) r for r >= rho. Throws OutOfDomain for r <= 0.
double Phi(const SmoothedCone& cone, double r);

/// (phi(r)^2, 1).
MetricCoefficients MetricAt(const SmoothedCone& cone, double r);

/// Gaussian curvature from the reduced closed form
///   (2pi - alpha)(2 f_v'(r) + r f_v''(r)) / (2pi phi(r)),
/// f_v(r) = f(r/rho). Zero for r >= rho. Throws OutOfDomain for r <= 0.
double CurvatureClosedForm(const SmoothedCone& cone, double r);

/// -phi''(r)/phi(r) with a three-point central difference of step h.
/// Uses only kernel values, never its derivatives. Throws OutOfDomain for
/// r <= 0 or h <= 0 and StepTooLarge for h >= r/4.
double CurvatureFiniteDifference(const SmoothedCone& cone, double r, double h);

/// Total curvature 2pi * integral_0^rho K(r) phi(r) dr of the smoothed disk
/// by adaptive Simpson; equals the angle defect 2pi - alpha analytically.
/// Throws QuadratureFailure if `quadrature_tol` is not met within 1e6
/// subintervals.
double TotalCurvature(const SmoothedCone& cone, double quadrature_tol = 1e-8);

/// Bi-Lipschitz distortion between the smoothed metric and the cone metric
/// on the disk: sup over r in (0, rho] of max(q, 1/q) with
/// q = phi(r) / ((alpha/2pi) r). Never exceeds max(alpha/2pi, 2pi/alpha).
double DistortionToCone(const SmoothedCone& cone);

}  // namespace conesmooth

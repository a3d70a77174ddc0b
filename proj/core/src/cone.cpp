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

#include "conesmooth/cone.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "conesmooth/error.h"
#include "conesmooth/quadrature.h"

namespace conesmooth {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string Num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void RequireRadius(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::kOutOfDomain, "radius must be positive and finite, got " + Num(r));
  }
}

// r * f(r / rho), the part of phi that depends on the kernel.
double KernelPart(const SmoothedCone& cone, double r) {
  if (r >= cone.rho()) return r;
  return r * cone.kernel().Evaluate(r / cone.rho()).value;
}

}  // namespace

ConeMetric::ConeMetric(double alpha, double radius) : alpha_(alpha), radius_(radius) {
  if (!(alpha > 0.0) || !(radius > 0.0)) {
    throw Error(ErrorCode::kNonPositiveArgument, "cone angle and radius must be positive");
  }
}

MetricCoefficients ConeMetric::At(double r) const {
  RequireRadius(r);
  const double circumferential = alpha_ / kTwoPi * r;
  return {circumferential * circumferential, 1.0};
}

const std::shared_ptr<const SmoothingKernel>& StandardKernel() {
  static const auto kernel = std::make_shared<const SmoothingKernel>(SmoothingKernel::Standard());
  return kernel;
}

SmoothedCone::SmoothedCone(double alpha, double rho) : SmoothedCone(alpha, rho, StandardKernel()) {}

SmoothedCone::SmoothedCone(double alpha, double rho, std::shared_ptr<const SmoothingKernel> kernel)
    : alpha_(alpha), rho_(rho), ratio_(alpha / kTwoPi), kernel_(std::move(kernel)) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::kNonPositiveArgument, "cone angle must be positive, got " + Num(alpha));
  }
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw Error(ErrorCode::kNonPositiveArgument, "safe radius must be positive, got " + Num(rho));
  }
  if (!kernel_) throw Error(ErrorCode::kInvalidArgument, "smoothed cone needs a kernel");
}

double Phi(const SmoothedCone& cone, double r) {
  RequireRadius(r);
  if (r >= cone.rho()) return cone.angle_ratio() * r;
  const double f = cone.kernel().Evaluate(r / cone.rho()).value;
  return (f * (cone.angle_ratio() - 1.0) + 1.0) * r;
}

MetricCoefficients MetricAt(const SmoothedCone& cone, double r) {
  const double phi = Phi(cone, r);
  return {phi * phi, 1.0};
}

double CurvatureClosedForm(const SmoothedCone& cone, double r) {
  RequireRadius(r);
  if (r >= cone.rho()) return 0.0;
  const double rho = cone.rho();
  const KernelJet jet = cone.kernel().Evaluate(r / rho);
  const double fv1 = jet.d1 / rho;
  const double fv2 = jet.d2 / (rho * rho);
  return (kTwoPi - cone.alpha()) * (2.0 * fv1 + r * fv2) / (kTwoPi * Phi(cone, r));
}

double CurvatureFiniteDifference(const SmoothedCone& cone, double r, double h) {
  RequireRadius(r);
  if (!(h > 0.0)) throw Error(ErrorCode::kOutOfDomain, "step must be positive, got " + Num(h));
  if (h >= 0.25 * r) {
    throw Error(ErrorCode::kStepTooLarge,
                "step " + Num(h) + " is not below r/4 at r = " + Num(r));
  }
  // phi(x) = x + c * x f(x/rho). The linear term has zero second difference
  // in exact arithmetic, so the stencil is applied to the kernel term alone.
  const double c = cone.angle_ratio() - 1.0;
  const double second =
      (KernelPart(cone, r + h) - 2.0 * KernelPart(cone, r) + KernelPart(cone, r - h)) / (h * h);
  return -c * second / Phi(cone, r);
}

double TotalCurvature(const SmoothedCone& cone, double quadrature_tol) {
  // K * phi extends continuously by 0 to the tip.
  auto integrand = [&cone](double r) {
    if (r <= 0.0) return 0.0;
    return kTwoPi * CurvatureClosedForm(cone, r) * Phi(cone, r);
  };
  return AdaptiveSimpson(integrand, 0.0, cone.rho(), 0.25 * quadrature_tol).value;
}

double DistortionToCone(const SmoothedCone& cone) {
  // q = (f c + 1) / (c + 1) with c = alpha/2pi - 1 is monotone in f, and f
  // takes every value in (0, 1] on (0, rho]. The supremum is the larger of
  // the endpoint values: q = 1 at f = 1 and q -> 2pi/alpha as f -> 0.
  const double ratio = cone.angle_ratio();
  return std::max({1.0, 1.0 / ratio, ratio});
}

}  // namespace conesmooth

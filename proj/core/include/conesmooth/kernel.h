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
#include <functional>
#include <string>

namespace conesmooth {

/// Value and first two derivatives of a kernel at one point.
struct KernelJet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/**
 * Smooth transition t -> f(t) used to interpolate between a cone and the flat
 * metric: f vanishes to infinite order at 0, equals 1 for t >= 1 and lies in
 * (0, 1] on (0, inf).
 *
 * The shipped kernel is the logistic transition
 *   f(t) = 1 / (1 + exp(1/t - 1/(1-t)))   for 0 < t < 1,
 * which equals e(t) / (e(t) + e(1-t)) with e(s) = exp(-1/s). Derivatives are
 * closed form.
 */
class SmoothingKernel {
 public:
  using JetFunction = std::function<KernelJet(double)>;
  using ScalarFunction = std::function<double(double)>;

  /// The logistic transition described above.
  static SmoothingKernel Standard();

  /// Wraps arbitrary callables. `third_derivative` feeds the padding term of
  /// CertifyKernel.
  SmoothingKernel(std::string name, JetFunction jet, ScalarFunction third_derivative);

  /// Throws NonPositiveArgument for t <= 0.
  KernelJet Evaluate(double t) const;
  double ThirdDerivative(double t) const;

  /// t -> f(factor * t); the transition happens on (0, 1/factor].
  SmoothingKernel Compressed(double factor) const;

  const std::string& name() const { return name_; }

 private:
  std::string name_;
  JetFunction jet_;
  ScalarFunction third_;
};

/// The uniform bound the kernel derivatives must respect for the curvature
/// estimate to hold.
inline constexpr double kKernelBoundLimit = 16.0;

struct KernelCertificate {
  std::string kernel_name;
  double grid_step = 0.0;
  std::size_t grid_points = 0;
  double max_value = 0.0;  // sampled maxima over the grid on (0, 1]
  double max_abs_d1 = 0.0;
  double max_abs_d2 = 0.0;
  double max_abs_d3 = 0.0;
  double argmax_value = 0.0;
  double argmax_d1 = 0.0;
  double argmax_d2 = 0.0;
  /// Lipschitz constant used for |f''| between grid nodes.
  double d3_bound = 0.0;
  /// Added to each sampled maximum: Lipschitz constant times grid_step / 2.
  double padding_value = 0.0;
  double padding_d1 = 0.0;
  double padding_d2 = 0.0;
  /// max over f, |f'|, |f''| of sampled maximum plus padding.
  double certified_bound = 0.0;
};

/// Safety factor applied to the sampled maximum of |f'''| before it is used
/// as a Lipschitz constant for f''.
inline constexpr double kThirdDerivativeMargin = 2.0;

/**
 * Establishes a uniform bound B >= sup f, sup |f'|, sup |f''| on (0, inf).
 *
 * Samples the jet on the grid t_i = i * grid_step over (0, 1] and pads each
 * sampled maximum by L * grid_step / 2, where L is a Lipschitz constant of the
 * sampled quantity: |f'| for f, |f''| for f', and
 * kThirdDerivativeMargin * max|f'''| for f''. On [1, inf) the kernel must be
 * exactly (1, 0, 0). Also checks 0 < f <= 1 on the grid and infinite-order
 * vanishing near 0.
 *
 * Throws InvalidArgument if grid_step is not in (0, 1e-4],
 * KernelInvariantViolation if a structural property fails, and
 * BoundViolation (naming the derivative and witness t) if B > 16.
 */
KernelCertificate CertifyKernel(const SmoothingKernel& kernel, double grid_step);

/// Multi-line human-readable record of a certification run.
std::string FormatCertificate(const KernelCertificate& certificate);

}  // namespace conesmooth

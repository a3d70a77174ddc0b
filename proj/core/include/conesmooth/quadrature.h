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

namespace conesmooth {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t intervals = 0;  // accepted subintervals
};

/**
 * Adaptive Simpson quadrature of `f` over [a, b] with Richardson correction.
 * Each accepted subinterval satisfies |S_fine - S_coarse| <= 15 * its share of
 * `abs_tol`. The first `min_depth` levels are always subdivided so narrow
 * features are not skipped by the initial five-point sample.
 *
 * Throws QuadratureFailure when more than `max_intervals` subintervals would
 * be needed or the bisection depth is exhausted.
 */
QuadratureResult AdaptiveSimpson(const std::function<double(double)>& f, double a, double b,
                                 double abs_tol, std::size_t max_intervals = 1'000'000,
                                 int min_depth = 4);

}  // namespace conesmooth

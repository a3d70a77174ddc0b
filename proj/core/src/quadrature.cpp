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

#include "conesmooth/quadrature.h"

#include <cmath>
#include <string>
#include <vector>

#include "conesmooth/error.h"

namespace conesmooth {

namespace {

constexpr int kMaxDepth = 60;

struct Panel {
  double a, m, b;
  double fa, fm, fb;
  double whole;
  double tol;
  int depth;
};

double Simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

}  // namespace

QuadratureResult AdaptiveSimpson(const std::function<double(double)>& f, double a, double b,
                                 double abs_tol, std::size_t max_intervals, int min_depth) {
  if (!(abs_tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "quadrature tolerance must be positive");
  }
  QuadratureResult result;
  if (a == b) return result;

  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  std::vector<Panel> stack{{a, m, b, fa, fm, fb, Simpson(a, b, fa, fm, fb), abs_tol, 0}};
  std::size_t pending = 1;

  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double lm = 0.5 * (p.a + p.m);
    const double rm = 0.5 * (p.m + p.b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = Simpson(p.a, p.m, p.fa, flm, p.fm);
    const double right = Simpson(p.m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;
    if (p.depth >= min_depth && std::abs(delta) <= 15.0 * p.tol) {
      result.value += left + right + delta / 15.0;
      result.error_estimate += std::abs(delta) / 15.0;
      ++result.intervals;
      --pending;
      continue;
    }
    if (p.depth + 1 > kMaxDepth) {
      throw Error(ErrorCode::kQuadratureFailure,
                  "adaptive Simpson exhausted its bisection depth near x = " + std::to_string(p.m));
    }
    if (++pending > max_intervals) {
      throw Error(ErrorCode::kQuadratureFailure,
                  "adaptive Simpson exceeded its budget of " + std::to_string(max_intervals) +
                      " subintervals");
    }
    stack.push_back({p.m, rm, p.b, p.fm, frm, p.fb, right, 0.5 * p.tol, p.depth + 1});
    stack.push_back({p.a, lm, p.m, p.fa, flm, p.fm, left, 0.5 * p.tol, p.depth + 1});
  }
  return result;
}

}  // namespace conesmooth

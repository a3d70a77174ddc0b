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

#include "conesmooth/kernel.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <utility>

#include "conesmooth/error.h"

namespace conesmooth {

namespace {

std::string Num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// f(t) = s(w(t)) with s(x) = 1/(1 + e^x) and w(t) = 1/t - 1/(1-t).
struct LogisticParts {
  double s;   // s(w)
  double sc;  // 1 - s(w), computed without cancellation
  double w1, w2, w3;
};

LogisticParts Logistic(double t) {
  const double u = 1.0 - t;
  const double w = 1.0 / t - 1.0 / u;
  LogisticParts p{};
  if (w >= 0.0) {
    const double e = std::exp(-w);
    p.s = e / (1.0 + e);
    p.sc = 1.0 / (1.0 + e);
  } else {
    const double e = std::exp(w);
    p.s = 1.0 / (1.0 + e);
    p.sc = e / (1.0 + e);
  }
  const double t2 = t * t, u2 = u * u;
  p.w1 = -1.0 / t2 - 1.0 / u2;
  p.w2 = 2.0 / (t2 * t) - 2.0 / (u2 * u);
  p.w3 = -6.0 / (t2 * t2) - 6.0 / (u2 * u2);
  return p;
}

KernelJet StandardJet(double t) {
  if (t >= 1.0) return {1.0, 0.0, 0.0};
  const LogisticParts p = Logistic(t);
  const double q = p.s * p.sc;  // -s'(w)
  if (q == 0.0) return {p.s, 0.0, 0.0};
  return {p.s, -q * p.w1, q * (p.sc - p.s) * p.w1 * p.w1 - q * p.w2};
}

double StandardThird(double t) {
  if (t >= 1.0) return 0.0;
  const LogisticParts p = Logistic(t);
  const double q = p.s * p.sc;
  if (q == 0.0) return 0.0;
  const double skew = p.sc - p.s;
  return q * (2.0 * q - skew * skew) * p.w1 * p.w1 * p.w1 + 3.0 * q * skew * p.w1 * p.w2 -
         q * p.w3;
}

void RequireEqual(const KernelJet& jet, double t, const std::string& name) {
  if (jet.value != 1.0 || jet.d1 != 0.0 || jet.d2 != 0.0) {
    throw Error(ErrorCode::kKernelInvariantViolation,
                "kernel " + name + " is not exactly (1, 0, 0) at t = " + Num(t));
  }
}

}  // namespace

SmoothingKernel SmoothingKernel::Standard() {
  return SmoothingKernel("logistic-transition", StandardJet, StandardThird);
}

SmoothingKernel::SmoothingKernel(std::string name, JetFunction jet, ScalarFunction third_derivative)
    : name_(std::move(name)), jet_(std::move(jet)), third_(std::move(third_derivative)) {}

KernelJet SmoothingKernel::Evaluate(double t) const {
  if (!(t > 0.0)) {
    throw Error(ErrorCode::kNonPositiveArgument, "kernel argument must be positive, got " + Num(t));
  }
  return jet_(t);
}

double SmoothingKernel::ThirdDerivative(double t) const {
  if (!(t > 0.0)) {
    throw Error(ErrorCode::kNonPositiveArgument, "kernel argument must be positive, got " + Num(t));
  }
  return third_(t);
}

SmoothingKernel SmoothingKernel::Compressed(double factor) const {
  if (!(factor > 0.0)) {
    throw Error(ErrorCode::kNonPositiveArgument, "compression factor must be positive");
  }
  auto jet = [base = jet_, factor](double t) {
    const KernelJet j = base(factor * t);
    return KernelJet{j.value, factor * j.d1, factor * factor * j.d2};
  };
  auto third = [base = third_, factor](double t) { return factor * factor * factor * base(factor * t); };
  return SmoothingKernel(name_ + " compressed x" + Num(factor), jet, third);
}

KernelCertificate CertifyKernel(const SmoothingKernel& kernel, double grid_step) {
  if (!(grid_step > 0.0) || grid_step > 1e-4) {
    throw Error(ErrorCode::kInvalidArgument,
                "certification grid step must lie in (0, 1e-4], got " + Num(grid_step));
  }
  const std::string& name = kernel.name();

  for (double t : {1.0, 1.0 + grid_step, 1.5, 2.0, 10.0, 1e6}) {
    RequireEqual(kernel.Evaluate(t), t, name);
  }
  // Infinite-order vanishing, checked against t^8 at a few small arguments.
  for (double t : {1e-4, 1e-5, 1e-6}) {
    const KernelJet j = kernel.Evaluate(t);
    const double tol = 1e-12 * std::pow(t, 8);
    if (std::abs(j.value) > tol || std::abs(j.d1) > tol || std::abs(j.d2) > tol) {
      throw Error(ErrorCode::kKernelInvariantViolation,
                  "kernel " + name + " does not vanish to high order at t = " + Num(t) +
                      " (f = " + Num(j.value) + ")");
    }
  }

  KernelCertificate c;
  c.kernel_name = name;
  c.grid_step = grid_step;
  const auto steps = static_cast<std::size_t>(std::ceil(1.0 / grid_step));
  for (std::size_t i = 1; i <= steps; ++i) {
    const double t = std::min(1.0, static_cast<double>(i) * grid_step);
    const KernelJet j = kernel.Evaluate(t);
    const double d3 = std::abs(kernel.ThirdDerivative(t));
    if (!std::isfinite(j.value) || !std::isfinite(j.d1) || !std::isfinite(j.d2) ||
        !std::isfinite(d3)) {
      throw Error(ErrorCode::kKernelInvariantViolation,
                  "kernel " + name + " is not finite at t = " + Num(t));
    }
    if (j.value < 0.0 || j.value > 1.0) {
      throw Error(ErrorCode::kKernelInvariantViolation,
                  "kernel " + name + " leaves [0, 1] at t = " + Num(t) + " (f = " + Num(j.value) + ")");
    }
    if (j.value > c.max_value) c.max_value = j.value, c.argmax_value = t;
    if (std::abs(j.d1) > c.max_abs_d1) c.max_abs_d1 = std::abs(j.d1), c.argmax_d1 = t;
    if (std::abs(j.d2) > c.max_abs_d2) c.max_abs_d2 = std::abs(j.d2), c.argmax_d2 = t;
    c.max_abs_d3 = std::max(c.max_abs_d3, d3);
    ++c.grid_points;
  }

  const double half = 0.5 * grid_step;
  c.d3_bound = kThirdDerivativeMargin * c.max_abs_d3;
  c.padding_d2 = c.d3_bound * half;
  c.padding_d1 = (c.max_abs_d2 + c.padding_d2) * half;
  c.padding_value = (c.max_abs_d1 + c.padding_d1) * half;
  const std::array<std::pair<double, const char*>, 3> bounds{{
      {c.max_value + c.padding_value, "f"},
      {c.max_abs_d1 + c.padding_d1, "|f'|"},
      {c.max_abs_d2 + c.padding_d2, "|f''|"},
  }};
  const std::array<double, 3> witnesses{c.argmax_value, c.argmax_d1, c.argmax_d2};
  for (std::size_t k = 0; k < bounds.size(); ++k) {
    c.certified_bound = std::max(c.certified_bound, bounds[k].first);
    if (bounds[k].first > kKernelBoundLimit) {
      throw Error(ErrorCode::kBoundViolation,
                  "kernel " + name + ": " + bounds[k].second + " reaches " + Num(bounds[k].first) +
                      " > 16 near t = " + Num(witnesses[k]));
    }
  }
  return c;
}

std::string FormatCertificate(const KernelCertificate& c) {
  std::ostringstream os;
  os.precision(10);
  os << "kernel            " << c.kernel_name << "\n"
     << "grid              step " << c.grid_step << " on (0, 1], " << c.grid_points << " points\n"
     << "max f             " << c.max_value << " at t = " << c.argmax_value << ", padding "
     << c.padding_value << "\n"
     << "max |f'|          " << c.max_abs_d1 << " at t = " << c.argmax_d1 << ", padding "
     << c.padding_d1 << "\n"
     << "max |f''|         " << c.max_abs_d2 << " at t = " << c.argmax_d2 << ", padding "
     << c.padding_d2 << "\n"
     << "max |f'''|        " << c.max_abs_d3 << " (Lipschitz constant used: " << c.d3_bound
     << " = " << kThirdDerivativeMargin << " x sampled)\n"
     << "certified bound   " << c.certified_bound << "\n"
     << "limit             " << kKernelBoundLimit << "\n"
     << "verdict           " << (c.certified_bound <= kKernelBoundLimit ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace conesmooth

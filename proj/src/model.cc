// Copyright 2026 The ibsplan Authors
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
//


#include "ibs/model.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "ibs/errors.h"

namespace ibs {
namespace {

void CheckRatio(double ratio) {
  if (!(ratio > 1.0) || std::isinf(ratio)) {
    throw DomainError("interval ratio M must be a finite value > 1, got " +
                      std::to_string(ratio));
  }
}

// M log M / (M - 1) relative to r: the interval coefficient without r.
double LogRatioOverExcess(double ratio) {
  return std::log(ratio) / (ratio - 1.0);
}

}  // namespace

RelativeInterval::RelativeInterval(double mu1, double mu2)
    : mu1_(mu1), mu2_(mu2) {
  if (!(mu1 > 1.0) || !(mu2 > 1.0) || std::isinf(mu1) || std::isinf(mu2)) {
    throw DomainError("relative interval needs mu1 > 1 and mu2 > 1");
  }
}

RelativeInterval RelativeInterval::Symmetric(double m) {
  if (!(m > 0.0)) throw DomainError("error margin m must be > 0");
  return RelativeInterval(1.0 + m, 1.0 + m);
}

RelativeInterval RelativeInterval::AbsoluteError(double m) {
  if (!(m > 0.0 && m < 1.0)) {
    throw DomainError("absolute-error margin m must lie in (0,1)");
  }
  return RelativeInterval(1.0 + m, 1.0 / (1.0 - m));
}

RelativeInterval RelativeInterval::FromRatio(double ratio) {
  CheckRatio(ratio);
  const double root = std::sqrt(ratio);
  return RelativeInterval(root, root);
}

EstimatorSpec::EstimatorSpec(Shape r_in, double omega_in, double d_in)
    : r(r_in), omega(omega_in), d(d_in) {
  if (!(omega > 0.0) || std::isinf(omega)) {
    throw DomainError("estimator numerator omega must be > 0");
  }
  if (!(r.value() + d > 0.0) || std::isinf(d)) {
    throw DomainError("estimator shift must satisfy r + d > 0");
  }
}

EstimatorSpec EstimatorSpec::Unbiased(Shape r) {
  return EstimatorSpec(r, r.value() - 1.0, -1.0);
}

EstimatorSpec EstimatorSpec::ReducedNumerator(Shape r) {
  return EstimatorSpec(r, r.value() - 1.0, 0.0);
}

EstimatorSpec EstimatorSpec::MaxLikelihood(Shape r) {
  return EstimatorSpec(r, r.value(), 0.0);
}

double optimal_omega(Shape r, const RelativeInterval& iv) {
  return r.value() * (std::log(iv.mu2()) + std::log(iv.mu1())) /
         (iv.mu2() - 1.0 / iv.mu1());
}

double asymptotic_confidence(const EstimatorSpec& spec,
                             const RelativeInterval& iv) {
  const double hi = lower_reg_gamma(spec.r, spec.omega * iv.mu2());
  const double lo = lower_reg_gamma(spec.r, spec.omega / iv.mu1());
  return std::max(0.0, hi - lo);
}

IntervalCoefficients optimal_interval_coefficients(Shape r, double ratio) {
  CheckRatio(ratio);
  const double lower = r.value() * LogRatioOverExcess(ratio);
  return {lower, ratio * lower};
}

double optimal_confidence(Shape r, double ratio) {
  const IntervalCoefficients k = optimal_interval_coefficients(r, ratio);
  return std::max(0.0, lower_reg_gamma(r, k.upper) - lower_reg_gamma(r, k.lower));
}

double point_estimate(const EstimatorSpec& spec, std::int64_t n) {
  if (n < spec.r.value()) {
    throw DomainError("point_estimate: stopping time below r");
  }
  return spec.omega / (static_cast<double>(n) + spec.d);
}

IntervalEstimate interval_estimate(const EstimatorSpec& spec,
                                   const RelativeInterval& iv, std::int64_t n) {
  const double p_hat = point_estimate(spec, n);
  return {p_hat / iv.mu1(), p_hat * iv.mu2()};
}

}  // namespace ibs

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


#ifndef IBS_MODEL_H_
#define IBS_MODEL_H_

#include <cstdint>

#include "ibs/specfun.h"

namespace ibs {

// Relative window [p / mu2, p * mu1] the estimate must land in. Equivalently
// the random interval [p_hat / mu1, p_hat * mu2] covers p.
class RelativeInterval {
 public:
  // Throws DomainError unless mu1 > 1 and mu2 > 1.
  RelativeInterval(double mu1, double mu2);

  // mu1 = mu2 = 1 + m.
  static RelativeInterval Symmetric(double m);
  // mu1 = 1 + m, mu2 = 1 / (1 - m): |p_hat - p| <= m p. Needs 0 < m < 1.
  static RelativeInterval AbsoluteError(double m);
  // mu1 = mu2 = sqrt(M). Any split with the same product has the same c*.
  static RelativeInterval FromRatio(double ratio);

  double mu1() const { return mu1_; }
  double mu2() const { return mu2_; }
  // M = mu1 * mu2, the ratio between the interval estimator's end points.
  double ratio() const { return mu1_ * mu2_; }

  // Closed-interval membership p / mu2 <= estimate <= p * mu1.
  bool Contains(double estimate, double p) const {
    return estimate >= p / mu2_ && estimate <= p * mu1_;
  }

 private:
  double mu1_;
  double mu2_;
};

// Non-randomized estimator p_hat = omega / (N + d) with stopping rule r.
struct EstimatorSpec {
  // Throws DomainError unless omega > 0 and r + d > 0.
  EstimatorSpec(Shape r, double omega, double d);

  // (r - 1) / (N - 1), the minimum variance unbiased estimator.
  static EstimatorSpec Unbiased(Shape r);
  // (r - 1) / N.
  static EstimatorSpec ReducedNumerator(Shape r);
  // r / N, maximum likelihood.
  static EstimatorSpec MaxLikelihood(Shape r);

  Shape r;
  double omega;
  double d;
};

// Omega* = r (log mu2 + log mu1) / (mu2 - 1/mu1), the numerator maximizing
// the small-p confidence.
double optimal_omega(Shape r, const RelativeInterval& iv);

// Limit of the confidence as p -> 0:
//   gamma(r, omega mu2) - gamma(r, omega / mu1).
// Does not depend on d.
double asymptotic_confidence(const EstimatorSpec& spec,
                             const RelativeInterval& iv);

// c* = gamma(r, r M log M / (M-1)) - gamma(r, r log M / (M-1)). No estimator
// based on inverse binomial sampling can guarantee more. Throws for M <= 1.
double optimal_confidence(Shape r, double ratio);

// Omega* / mu1 = r log M / (M - 1) and Omega* mu2 = M times that. These are
// the coefficients of the optimal interval estimator
//   [lower / (N + 1), upper / (N + 1)].
struct IntervalCoefficients {
  double lower;
  double upper;
};
IntervalCoefficients optimal_interval_coefficients(Shape r, double ratio);

double point_estimate(const EstimatorSpec& spec, std::int64_t n);

struct IntervalEstimate {
  double lower;
  double upper;
};

// [p_hat / mu1, p_hat * mu2]. With Omega = Omega* and d = 1 this is the
// interval estimator of minimal end-point ratio M for guaranteed c*.
IntervalEstimate interval_estimate(const EstimatorSpec& spec,
                                   const RelativeInterval& iv, std::int64_t n);

}  // namespace ibs

#endif  // IBS_MODEL_H_

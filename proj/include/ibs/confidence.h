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


#ifndef IBS_CONFIDENCE_H_
#define IBS_CONFIDENCE_H_

#include <cstdint>
#include <vector>

#include "ibs/model.h"
#include "ibs/specfun.h"

namespace ibs {

// Stopping times n whose estimate omega / (n + d) falls in [p/mu2, p*mu1].
// n1 and n2 are the unclipped ceil/floor values; only n >= r is reachable.
struct CoverageWindow {
  std::int64_t n1;
  std::int64_t n2;

  std::int64_t first(Shape r) const { return n1 > r.value() ? n1 : r.value(); }
  bool empty(Shape r) const { return n2 < first(r); }
};

// n1 = ceil(omega / (p mu1) - d), n2 = floor(omega mu2 / p - d). End points
// that land on an integer up to rounding are settled with the same
// closed-interval test the estimator itself is judged by, so n is in the
// window exactly when RelativeInterval::Contains(point_estimate(n), p).
CoverageWindow coverage_window(const EstimatorSpec& spec,
                               const RelativeInterval& iv, double p);

// c(p) = P[p/mu2 <= p_hat <= p mu1] = P[N <= n2] - P[N <= max(n1, r) - 1].
double exact_confidence(const EstimatorSpec& spec, const RelativeInterval& iv,
                        double p);

struct CurvePoint {
  double p;
  double c;
};

struct ConfidenceCurve {
  std::vector<CurvePoint> points;  // strictly increasing p
  std::vector<double> breakpoints;  // sorted, inside (p_min, p_max)
};

// One-sided offset used to probe both limits at each discontinuity of c(p).
inline constexpr double kBreakpointOffset = 0x1p-40;

// Evaluates c(p) on grid_size log-spaced points spanning [p_min, p_max] plus
// p (1 - eps) and p (1 + eps) for every discontinuity p in (p_min, p_max),
// i.e. every p at which some n >= r enters or leaves the coverage window.
// The number of breakpoints grows like omega mu2 / p_min.
ConfidenceCurve confidence_curve(const EstimatorSpec& spec,
                                 const RelativeInterval& iv, double p_min,
                                 double p_max, int grid_size);

// Smallest evaluated point of a curve (ties go to the smallest p). This only
// witnesses how low c(p) gets; it does not certify the infimum over all p.
CurvePoint scan_infimum(const ConfidenceCurve& curve);

// First-order coefficient w1 of the small-p expansion of the lower bound on
// c(p) for omega = Omega*, shift d:
//   w1 = (r log M / (M-1))^(r-1) M^(-r/(M-1)) / (2 (r-1)!)
//        * [r - 1 + 2d - (r + 1 + 2d) / M].
double first_order_margin(Shape r, double ratio, double d);

// (-r + (M + 1) / (M - 1)) / 2: shifts strictly above this make
// omega* / (N + d) guarantee c* for all sufficiently small p.
double asymptotic_shift_threshold(Shape r, double ratio);

bool asymptotic_guarantee_condition(Shape r, double ratio, double d);

}  // namespace ibs

#endif  // IBS_CONFIDENCE_H_

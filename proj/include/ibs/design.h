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


#ifndef IBS_DESIGN_H_
#define IBS_DESIGN_H_

#include "ibs/model.h"
#include "ibs/specfun.h"

namespace ibs {

// Which of the two sufficient conditions limits the global guarantee of the
// optimal estimator for a given r.
enum class BindingCondition {
  // (M - 1) / log M >= (r + sqrt r) / (r - 1), binding for r in {3, 4}.
  kSmallR,
  // M log M / (M - 1) >= (r + sqrt r + 1) / r, binding for r >= 5.
  kLargeR,
};

const char* ToString(BindingCondition c);
BindingCondition binding_condition_for(Shape r);

struct DesignResult {
  Shape r;
  double ratio;  // M
  double c_star;
  bool global_condition_met;
  BindingCondition binding_condition;
  double omega_star;
  IntervalCoefficients coefficients;  // interval end points times (N + 1)
};

// Describes the optimal estimator omega* / (N + 1) for (r, iv).
DesignResult describe_design(Shape r, const RelativeInterval& iv);

// True when omega* / (N + 1) is certified to guarantee c* for every p.
bool global_guarantee_condition(Shape r, double ratio);

// mu1 >= omega / (r - sqrt r) and mu2 >= (r + sqrt r + 1) / omega. When true
// the confidence of omega / (N + 1) exceeds its limit c_bar for all p.
// Only defined for d == 1; other shifts throw PreconditionError.
bool general_sufficient_condition(const EstimatorSpec& spec,
                                  const RelativeInterval& iv);

// The real t in (4, 5) at which both conditions hold with equality for the
// same M, i.e. the root of log((t + sqrt t + 1) / (t - sqrt t)) - (2 sqrt t
// + 1) / t.
double crossover_root();
double crossover_residual(double t);

// Smallest M satisfying each condition, with r treated as a real t > 1.
double small_r_threshold(double t);
double large_r_threshold(double t);

// h(r): global_guarantee_condition(r, M) holds iff M >= h(r). Decreasing in r.
double threshold_h(Shape r);

inline constexpr int kDefaultRCap = 100000;

// Smallest r >= 3 with c*(r, M) >= c0 (and, if require_global, the global
// condition). Throws UnreachableTarget past `cap`. The M-only form reports
// omega* for the symmetric split mu1 = mu2 = sqrt M.
DesignResult min_r_for_confidence(double ratio, double c0,
                                  bool require_global = true,
                                  int cap = kDefaultRCap);
DesignResult min_r_for_confidence(const RelativeInterval& iv, double c0,
                                  bool require_global = true,
                                  int cap = kDefaultRCap);

// M with c*(r, M) = c0, taken from the side where c* >= c0.
double ratio_for_confidence(Shape r, double c0);

// omega* / (N + 1).
EstimatorSpec make_optimal_estimator(Shape r, const RelativeInterval& iv);

}  // namespace ibs

#endif  // IBS_DESIGN_H_

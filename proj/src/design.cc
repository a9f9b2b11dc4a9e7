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


#include "ibs/design.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "ibs/errors.h"

namespace ibs {
namespace {

constexpr int kBisectionBits = 52;

double SmallRLhs(double ratio) {
  return (ratio - 1.0) / std::log1p(ratio - 1.0);
}
double SmallRRhs(double t) {
  return (t + std::sqrt(t)) / (t - 1.0);
}
double LargeRLhs(double ratio) {
  return ratio * std::log1p(ratio - 1.0) / (ratio - 1.0);
}
double LargeRRhs(double t) {
  return (t + std::sqrt(t) + 1.0) / t;
}

void CheckRatio(double ratio) {
  if (!(ratio > 1.0)) {
    throw DomainError("interval ratio M must be > 1, got " +
                      std::to_string(ratio));
  }
}

void CheckConfidence(double c0) {
  if (!(c0 > 0.0 && c0 < 1.0)) {
    throw DomainError("target confidence must lie in (0,1), got " +
                      std::to_string(c0));
  }
}

// Smallest M > 1 with lhs(M) >= rhs, for lhs increasing from 1 at M = 1+.
template <typename Lhs>
double SolveIncreasing(Lhs lhs, double rhs) {
  auto f = [&](double m) { return lhs(m) - rhs; };
  double lo = 1.0 + 1e-9;
  if (f(lo) >= 0.0) return lo;
  double hi = 2.0;
  while (f(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  const auto bracket = boost::math::tools::bisect(
      f, lo, hi, boost::math::tools::eps_tolerance<double>(kBisectionBits));
  return bracket.second;
}

DesignResult Describe(Shape r, double ratio, double omega_star) {
  return DesignResult{r,
                      ratio,
                      optimal_confidence(r, ratio),
                      global_guarantee_condition(r, ratio),
                      binding_condition_for(r),
                      omega_star,
                      optimal_interval_coefficients(r, ratio)};
}

// `split` only supplies omega*; every confidence figure uses `ratio`.
DesignResult MinR(double ratio, const RelativeInterval& split, double c0,
                  bool require_global, int cap) {
  CheckConfidence(c0);
  CheckRatio(ratio);
  int best_r = Shape::kMin;
  double best_c = -1.0;
  for (int r = Shape::kMin; r <= cap; ++r) {
    const Shape shape(r);
    const double c = optimal_confidence(shape, ratio);
    if (c > best_c) {
      best_c = c;
      best_r = r;
    }
    if (c >= c0 &&
        (!require_global || global_guarantee_condition(shape, ratio))) {
      return Describe(shape, ratio, optimal_omega(shape, split));
    }
  }
  throw UnreachableTarget(
      "target confidence unreachable at r cap " + std::to_string(cap), best_r,
      best_c);
}

}  // namespace

const char* ToString(BindingCondition c) {
  return c == BindingCondition::kSmallR ? "small_r" : "large_r";
}

BindingCondition binding_condition_for(Shape r) {
  return r.value() <= 4 ? BindingCondition::kSmallR : BindingCondition::kLargeR;
}

bool global_guarantee_condition(Shape r, double ratio) {
  CheckRatio(ratio);
  const double t = r.value();
  if (binding_condition_for(r) == BindingCondition::kSmallR) {
    return SmallRLhs(ratio) >= SmallRRhs(t);
  }
  return LargeRLhs(ratio) >= LargeRRhs(t);
}

bool general_sufficient_condition(const EstimatorSpec& spec,
                                  const RelativeInterval& iv) {
  if (spec.d != 1.0) {
    throw PreconditionError(
        "general_sufficient_condition is only established for d = 1");
  }
  const double r = spec.r.value();
  const double root = std::sqrt(r);
  return iv.mu1() >= spec.omega / (r - root) &&
         iv.mu2() >= (r + root + 1.0) / spec.omega;
}

double crossover_residual(double t) {
  const double root = std::sqrt(t);
  return std::log((t + root + 1.0) / (t - root)) - (2.0 * root + 1.0) / t;
}

double crossover_root() {
  constexpr double lo = 4.0;
  constexpr double hi = 5.0;
  if (!(crossover_residual(lo) > 0.0 && crossover_residual(hi) < 0.0)) {
    throw std::logic_error("crossover_root: [4, 5] does not bracket the root");
  }
  const auto bracket = boost::math::tools::bisect(
      crossover_residual, lo, hi,
      boost::math::tools::eps_tolerance<double>(kBisectionBits));
  const double a = bracket.first;
  const double b = bracket.second;
  return std::abs(crossover_residual(a)) < std::abs(crossover_residual(b)) ? a
                                                                           : b;
}

double small_r_threshold(double t) {
  if (!(t > 1.0)) throw DomainError("small_r_threshold: t must be > 1");
  return SolveIncreasing(SmallRLhs, SmallRRhs(t));
}

double large_r_threshold(double t) {
  if (!(t > 1.0)) throw DomainError("large_r_threshold: t must be > 1");
  return SolveIncreasing(LargeRLhs, LargeRRhs(t));
}

double threshold_h(Shape r) {
  return binding_condition_for(r) == BindingCondition::kSmallR
             ? small_r_threshold(r.value())
             : large_r_threshold(r.value());
}

EstimatorSpec make_optimal_estimator(Shape r, const RelativeInterval& iv) {
  return EstimatorSpec(r, optimal_omega(r, iv), 1.0);
}

DesignResult describe_design(Shape r, const RelativeInterval& iv) {
  return Describe(r, iv.ratio(), optimal_omega(r, iv));
}

DesignResult min_r_for_confidence(const RelativeInterval& iv, double c0,
                                  bool require_global, int cap) {
  return MinR(iv.ratio(), iv, c0, require_global, cap);
}

DesignResult min_r_for_confidence(double ratio, double c0, bool require_global,
                                  int cap) {
  return MinR(ratio, RelativeInterval::FromRatio(ratio), c0, require_global,
              cap);
}

double ratio_for_confidence(Shape r, double c0) {
  CheckConfidence(c0);
  auto f = [&](double m) { return optimal_confidence(r, m) - c0; };
  double lo = 1.0 + 1e-12;
  if (f(lo) >= 0.0) return lo;
  double hi = 2.0;
  while (f(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (std::isinf(hi)) {
      throw DomainError("ratio_for_confidence: no bracket found");
    }
  }
  const auto bracket = boost::math::tools::bisect(
      f, lo, hi, boost::math::tools::eps_tolerance<double>(kBisectionBits));
  return bracket.second;
}

}  // namespace ibs

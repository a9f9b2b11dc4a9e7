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


#include "ibs/confidence.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ibs/errors.h"
#include "parallel.h"

namespace ibs {
namespace {

// Stopping times beyond this are not representable as exact doubles.
constexpr double kMaxStoppingTime = 0x1p52;

void CheckOpenProbability(double p, const char* op) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError(std::string(op) + ": p must lie in (0,1), got " +
                      std::to_string(p));
  }
}

std::int64_t ToStoppingTime(double x, const char* what) {
  if (!(std::abs(x) < kMaxStoppingTime)) {
    throw DomainError(std::string("coverage_window: ") + what +
                      " out of range (p too small?)");
  }
  return static_cast<std::int64_t>(x);
}

void AddBreakpoints(double scale, double d, int r, double p_min, double p_max,
                    std::vector<double>& out) {
  // p = scale / (k + d) for integer k >= r.
  const double k_lo = std::max<double>(r, std::floor(scale / p_max - d));
  const double k_hi = std::ceil(scale / p_min - d);
  if (k_hi - k_lo > kMaxStoppingTime) {
    throw DomainError("confidence_curve: p_min too small");
  }
  for (double k = k_lo; k <= k_hi; ++k) {
    const double p = scale / (k + d);
    if (p > p_min && p < p_max) out.push_back(p);
  }
}

}  // namespace

CoverageWindow coverage_window(const EstimatorSpec& spec,
                               const RelativeInterval& iv, double p) {
  CheckOpenProbability(p, "coverage_window");
  const double omega = spec.omega;
  const double d = spec.d;
  const double low_edge = p / iv.mu2();
  const double high_edge = p * iv.mu1();
  auto estimate = [&](std::int64_t n) {
    return omega / (static_cast<double>(n) + d);
  };
  auto valid = [&](std::int64_t n) { return static_cast<double>(n) + d > 0.0; };

  std::int64_t n1 = ToStoppingTime(std::ceil(omega / high_edge - d), "n1");
  std::int64_t n2 = ToStoppingTime(std::floor(omega / low_edge - d), "n2");

  while (valid(n1 - 1) && estimate(n1 - 1) <= high_edge) --n1;
  while (valid(n1) && !(estimate(n1) <= high_edge)) ++n1;
  while (valid(n2 + 1) && estimate(n2 + 1) >= low_edge) ++n2;
  while (valid(n2) && !(estimate(n2) >= low_edge)) --n2;
  return {n1, n2};
}

double exact_confidence(const EstimatorSpec& spec, const RelativeInterval& iv,
                        double p) {
  const CoverageWindow w = coverage_window(spec, iv, p);
  if (w.empty(spec.r)) return 0.0;
  const double c = stopping_time_cdf(spec.r, p, w.n2) -
                   stopping_time_cdf(spec.r, p, w.first(spec.r) - 1);
  return std::clamp(c, 0.0, 1.0);
}

ConfidenceCurve confidence_curve(const EstimatorSpec& spec,
                                 const RelativeInterval& iv, double p_min,
                                 double p_max, int grid_size) {
  if (!(p_min > 0.0 && p_min < p_max && p_max < 1.0)) {
    throw DomainError("confidence_curve: need 0 < p_min < p_max < 1");
  }
  if (grid_size < 2) {
    throw DomainError("confidence_curve: grid_size must be >= 2");
  }
  ConfidenceCurve curve;
  AddBreakpoints(spec.omega / iv.mu1(), spec.d, spec.r.value(), p_min, p_max,
                 curve.breakpoints);
  AddBreakpoints(spec.omega * iv.mu2(), spec.d, spec.r.value(), p_min, p_max,
                 curve.breakpoints);
  std::sort(curve.breakpoints.begin(), curve.breakpoints.end());
  curve.breakpoints.erase(
      std::unique(curve.breakpoints.begin(), curve.breakpoints.end()),
      curve.breakpoints.end());

  std::vector<double> ps;
  ps.reserve(grid_size + 2 * curve.breakpoints.size());
  const double log_min = std::log(p_min);
  const double log_step = (std::log(p_max) - log_min) / (grid_size - 1);
  ps.push_back(p_min);
  for (int i = 1; i + 1 < grid_size; ++i) {
    ps.push_back(std::exp(log_min + i * log_step));
  }
  ps.push_back(p_max);
  for (double b : curve.breakpoints) {
    for (double p : {b * (1.0 - kBreakpointOffset), b * (1.0 + kBreakpointOffset)}) {
      if (p >= p_min && p <= p_max) ps.push_back(p);
    }
  }
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());

  // Largest stopping times occur at p_min; surface range errors here rather
  // than inside a worker.
  coverage_window(spec, iv, p_min);
  curve.points.resize(ps.size());
  const std::size_t chunks =
      ps.size() < 4096 ? 1 : internal::DefaultWorkers();
  internal::ParallelChunks(
      ps.size(), chunks, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
          curve.points[i] = {ps[i], exact_confidence(spec, iv, ps[i])};
        }
      });
  return curve;
}

CurvePoint scan_infimum(const ConfidenceCurve& curve) {
  if (curve.points.empty()) {
    throw DomainError("scan_infimum: empty curve");
  }
  CurvePoint best = curve.points.front();
  for (const CurvePoint& pt : curve.points) {
    if (pt.c < best.c) best = pt;
  }
  return best;
}

double first_order_margin(Shape r, double ratio, double d) {
  if (!(ratio > 1.0)) throw DomainError("first_order_margin: M must be > 1");
  const int rv = r.value();
  const double log_m = std::log(ratio);
  const double lower = rv * log_m / (ratio - 1.0);
  const double log_prefactor = (rv - 1) * std::log(lower) -
                               rv / (ratio - 1.0) * log_m - std::log(2.0) -
                               std::lgamma(static_cast<double>(rv));
  const double bracket = -(rv + 1 + 2 * d) / ratio + rv - 1 + 2 * d;
  return std::exp(log_prefactor) * bracket;
}

double asymptotic_shift_threshold(Shape r, double ratio) {
  if (!(ratio > 1.0)) {
    throw DomainError("asymptotic_shift_threshold: M must be > 1");
  }
  return 0.5 * (-r.value() + (ratio + 1.0) / (ratio - 1.0));
}

bool asymptotic_guarantee_condition(Shape r, double ratio, double d) {
  return d > asymptotic_shift_threshold(r, ratio);
}

}  // namespace ibs

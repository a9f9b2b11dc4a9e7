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


#include "ibs/specfun.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ibs/errors.h"

namespace ibs {
namespace {

constexpr double kLogSqrt2Pi = 0.918938533204672741780329736406;
constexpr double kRelStop = 1e-17;

double Clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

void CheckOpenProbability(double p, const char* op) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError(std::string(op) + ": p must lie in (0,1), got " +
                      std::to_string(p));
  }
}

// lgamma(n + 1) - (n + 1/2) log n + n - log sqrt(2 pi), for n > 0.
double StirlingError(double n) {
  constexpr double s0 = 1.0 / 12;
  constexpr double s1 = 1.0 / 360;
  constexpr double s2 = 1.0 / 1260;
  constexpr double s3 = 1.0 / 1680;
  constexpr double s4 = 1.0 / 1188;
  if (n <= 15.0) {
    return std::lgamma(n + 1.0) - (n + 0.5) * std::log(n) + n - kLogSqrt2Pi;
  }
  const double nn = n * n;
  if (n > 500) return (s0 - s1 / nn) / n;
  if (n > 80) return (s0 - (s1 - s2 / nn) / nn) / n;
  if (n > 35) return (s0 - (s1 - (s2 - s3 / nn) / nn) / nn) / n;
  return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

// Deviance term x log(x / m) + m - x, accurate when x and m are close.
double Deviance(double x, double m) {
  if (std::abs(x - m) < 0.1 * (x + m)) {
    double v = (x - m) / (x + m);
    double s = (x - m) * v;
    double ej = 2.0 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double next = s + ej / (2 * j + 1);
      if (next == s) return next;
      s = next;
    }
    return s;
  }
  return x * std::log(x / m) + m - x;
}

// log(e^-t t^k / k!) for integer k >= 0, t > 0.
double PoissonLogPmf(double k, double t) {
  if (k == 0) return -t;
  return -StirlingError(k) - Deviance(k, t) - 0.5 * std::log(k) - kLogSqrt2Pi;
}

}  // namespace

Shape::Shape(int r) : r_(r) {
  if (r < kMin) {
    throw DomainError("shape r must be >= 3, got " + std::to_string(r));
  }
}

double lower_reg_gamma(Shape shape, double t) {
  if (!(t >= 0.0)) {
    throw DomainError("lower_reg_gamma: t must be >= 0");
  }
  if (t == 0.0) return 0.0;
  if (std::isinf(t)) return 1.0;
  const int r = shape.value();

  if (t < r) {
    // P = sum_{j >= r} Poisson(j; t); terms shrink monotonically.
    double term = std::exp(PoissonLogPmf(r, t));
    double sum = 0.0;
    for (double j = r; term > kRelStop * sum; ++j) {
      sum += term;
      term *= t / (j + 1.0);
    }
    return Clamp01(sum);
  }
  // 1 - Q with Q = sum_{j < r} Poisson(j; t); summed downward from r - 1.
  double term = std::exp(PoissonLogPmf(r - 1, t));
  double sum = 0.0;
  for (int j = r - 1; j >= 0; --j) {
    sum += term;
    if (term <= kRelStop * sum) break;
    term *= j / t;
  }
  return Clamp01(1.0 - sum);
}

double binom_log_pmf(std::int64_t n, double p, std::int64_t i) {
  CheckOpenProbability(p, "binom_log_pmf");
  if (n < 1) throw DomainError("binom_log_pmf: n must be positive");
  if (i < 0 || i > n) throw DomainError("binom_log_pmf: i outside [0, n]");
  const double q = 1.0 - p;
  if (i == 0) return static_cast<double>(n) * std::log1p(-p);
  if (i == n) return static_cast<double>(n) * std::log(p);
  const double nd = static_cast<double>(n);
  const double x = static_cast<double>(i);
  const double y = nd - x;
  const double lc = StirlingError(nd) - StirlingError(x) - StirlingError(y) -
                    Deviance(x, nd * p) - Deviance(y, nd * q);
  return lc + 0.5 * std::log(nd / (x * y)) - kLogSqrt2Pi;
}

double stopping_time_cdf(Shape shape, double p, std::int64_t n) {
  CheckOpenProbability(p, "stopping_time_cdf");
  const int r = shape.value();
  if (n < r) return 0.0;
  // Walk the binomial terms b(n, p; i) from i = r - 1 down in log space.
  const double log_odds = std::log1p(-p) - std::log(p);
  const double nd = static_cast<double>(n);
  double log_term = binom_log_pmf(n, p, r - 1);
  double tail = 0.0;
  for (int i = r - 1; i >= 0; --i) {
    const double term = std::exp(log_term);
    tail += term;
    // Past the mode the terms only shrink; stop once they are negligible.
    if (i < nd * p && term <= kRelStop * tail) break;
    if (i > 0) log_term += std::log(i / (nd - i + 1.0)) + log_odds;
  }
  return Clamp01(1.0 - tail);
}

double stopping_time_pmf(Shape shape, double p, std::int64_t n) {
  CheckOpenProbability(p, "stopping_time_pmf");
  const int r = shape.value();
  if (n < r) throw DomainError("stopping_time_pmf: n must be >= r");
  // f(n) = p * b(n - 1, p; r - 1)
  return Clamp01(std::exp(std::log(p) + binom_log_pmf(n - 1, p, r - 1)));
}

double phi_density(Shape shape, double t) {
  if (!(t > 0.0)) throw DomainError("phi_density: t must be > 0");
  if (std::isinf(t)) return 0.0;
  return std::exp(PoissonLogPmf(shape.value() - 1, t));
}

double phi_upper_bound(Shape shape) {
  return phi_density(shape, shape.value() - 1.0);
}

}  // namespace ibs

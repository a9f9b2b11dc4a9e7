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


#ifndef IBS_SPECFUN_H_
#define IBS_SPECFUN_H_

#include <cstdint>

namespace ibs {

// Number of successes r that ends inverse binomial sampling. Every result in
// this library assumes r >= 3; construction enforces it.
class Shape {
 public:
  static constexpr int kMin = 3;

  // Throws DomainError for r < 3.
  explicit Shape(int r);

  int value() const { return r_; }

  friend bool operator==(Shape a, Shape b) = default;

 private:
  int r_;
};

// Regularized lower incomplete gamma function with integer shape,
//   gamma(r, t) = 1 - exp(-t) * sum_{j<r} t^j / j!.
// Evaluated as a sum of Poisson probabilities computed in log space; the
// short side of the Poisson split is summed so no cancellation occurs.
double lower_reg_gamma(Shape r, double t);

// log of the binomial probability b(n, p; i). Uses the saddle-point
// (Stirling error + deviance) form so it stays accurate for n up to ~1e9 and
// beyond, where log-gamma differences lose digits.
double binom_log_pmf(std::int64_t n, double p, std::int64_t i);

// P[N <= n] for the inverse binomial stopping time N. Computed as the r-term
// binomial complement 1 - sum_{i<r} b(n, p; i), so the cost is O(r) for any n.
double stopping_time_cdf(Shape r, double p, std::int64_t n);

// P[N = n] = C(n-1, r-1) p^r (1-p)^(n-r), n >= r.
double stopping_time_pmf(Shape r, double p, std::int64_t n);

// Gamma density t^(r-1) e^(-t) / (r-1)!, the derivative of lower_reg_gamma.
double phi_density(Shape r, double t);

// Q_r = (r-1)^(r-1) e^(-(r-1)) / (r-1)!, the maximum of phi_density over t.
double phi_upper_bound(Shape r);

}  // namespace ibs

#endif  // IBS_SPECFUN_H_

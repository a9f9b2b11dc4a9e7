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
#include <random>

#include <boost/math/special_functions/gamma.hpp>
#include <gtest/gtest.h>

#include "ibs/errors.h"

namespace ibs {
namespace {

const RelativeInterval kTwo(2.0, 2.0);

TEST(RelativeIntervalTest, Validation) {
  EXPECT_THROW(RelativeInterval(1.0, 2.0), DomainError);
  EXPECT_THROW(RelativeInterval(2.0, 0.5), DomainError);
  EXPECT_THROW(RelativeInterval::AbsoluteError(1.0), DomainError);
  EXPECT_THROW(RelativeInterval::Symmetric(0.0), DomainError);
  EXPECT_THROW(RelativeInterval::FromRatio(1.0), DomainError);
}

TEST(RelativeIntervalTest, Constructors) {
  const auto s = RelativeInterval::Symmetric(0.5);
  EXPECT_EQ(s.mu1(), 1.5);
  EXPECT_EQ(s.mu2(), 1.5);
  EXPECT_EQ(s.ratio(), 2.25);
  const auto a = RelativeInterval::AbsoluteError(0.4);
  EXPECT_DOUBLE_EQ(a.mu1(), 1.4);
  EXPECT_DOUBLE_EQ(a.mu2(), 1.0 / 0.6);
  EXPECT_DOUBLE_EQ(RelativeInterval::FromRatio(4.0).mu1(), 2.0);
}

TEST(EstimatorSpecTest, ClassicalFamilyAndValidation) {
  const Shape r(5);
  const auto u = EstimatorSpec::Unbiased(r);
  EXPECT_EQ(u.omega, 4.0);
  EXPECT_EQ(u.d, -1.0);
  EXPECT_EQ(EstimatorSpec::ReducedNumerator(r).d, 0.0);
  EXPECT_EQ(EstimatorSpec::MaxLikelihood(r).omega, 5.0);
  EXPECT_THROW(EstimatorSpec(r, 0.0, 1.0), DomainError);
  EXPECT_THROW(EstimatorSpec(r, 1.0, -5.0), DomainError);
  EXPECT_NO_THROW(EstimatorSpec(r, 1.0, -4.5));
}

TEST(OptimalOmegaTest, HandValue) {
  const double omega = optimal_omega(Shape(3), kTwo);
  EXPECT_NEAR(omega, 2.7725887222, 1e-10);
  EXPECT_NEAR(omega / kTwo.mu1(), std::log(4.0), 1e-15);
  EXPECT_NEAR(omega / kTwo.mu1(), 1.3862943611, 1e-10);
}

TEST(OptimalOmegaTest, IdentitiesAndOrdering) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> mu(1.01, 6.0);
  std::uniform_int_distribution<int> rd(3, 200);
  for (int i = 0; i < 100; ++i) {
    const RelativeInterval iv(mu(gen), mu(gen));
    const Shape r(rd(gen));
    const double m = iv.ratio();
    const double omega = optimal_omega(r, iv);
    const double lower = r.value() * std::log(m) / (m - 1.0);
    EXPECT_NEAR(omega / iv.mu1(), lower, 1e-12 * lower);
    EXPECT_NEAR(omega * iv.mu2(), m * lower, 1e-12 * m * lower);
    EXPECT_LT(omega / iv.mu1(), r.value());
    EXPECT_GT(omega * iv.mu2(), r.value());
  }
}

// Frozen from boost::math::gamma_p(10, 9 * 1.9074) - gamma_p(10, 9 / 1.9074).
TEST(AsymptoticConfidenceTest, ReducedNumeratorAtR10) {
  const RelativeInterval iv = RelativeInterval::Symmetric(0.9074);
  const EstimatorSpec spec(Shape(10), 9.0, 0.0);
  const double oracle = boost::math::gamma_p(10.0, 9.0 * iv.mu2()) -
                        boost::math::gamma_p(10.0, 9.0 / iv.mu1());
  EXPECT_NEAR(asymptotic_confidence(spec, iv), oracle, 1e-14);
  EXPECT_NEAR(asymptotic_confidence(spec, iv), 0.9533146833, 1e-9);
}

TEST(AsymptoticConfidenceTest, OptimalAtR3) {
  const EstimatorSpec spec(Shape(3), optimal_omega(Shape(3), kTwo), 0.0);
  EXPECT_NEAR(asymptotic_confidence(spec, kTwo), 0.751175, 1e-5);
  // Closed form gamma(3, t) = 1 - e^-t (1 + t + t^2 / 2).
  auto g3 = [](double t) { return 1 - std::exp(-t) * (1 + t + t * t / 2); };
  EXPECT_NEAR(asymptotic_confidence(spec, kTwo),
              g3(4 * std::log(4.0)) - g3(std::log(4.0)), 1e-15);
}

TEST(AsymptoticConfidenceTest, IncreasesWithMu2AndIgnoresShift) {
  const Shape r(7);
  const EstimatorSpec a(r, 6.0, 0.0);
  const EstimatorSpec b(r, 6.0, 3.0);
  double prev = 0.0;
  for (double mu2 = 1.05; mu2 < 5.0; mu2 += 0.05) {
    const RelativeInterval iv(1.5, mu2);
    const double c = asymptotic_confidence(a, iv);
    EXPECT_GT(c, prev);
    EXPECT_EQ(c, asymptotic_confidence(b, iv));
    prev = c;
  }
}

TEST(OptimalConfidenceTest, Values) {
  EXPECT_NEAR(optimal_confidence(Shape(3), 4.0), 0.751175, 1e-5);
  EXPECT_NEAR(optimal_confidence(Shape(10), 1.8808 * 1.8808), 0.95, 1e-3);
  EXPECT_THROW(optimal_confidence(Shape(3), 1.0), DomainError);
  EXPECT_THROW(optimal_confidence(Shape(3), 0.5), DomainError);
}

TEST(OptimalConfidenceTest, EqualsAsymptoticConfidenceAtOmegaStar) {
  for (const RelativeInterval iv :
       {RelativeInterval(2.0, 2.0), RelativeInterval(1.2, 3.5),
        RelativeInterval::AbsoluteError(0.4)}) {
    for (int r : {3, 8, 40}) {
      const Shape s(r);
      const EstimatorSpec spec(s, optimal_omega(s, iv), 1.0);
      EXPECT_NEAR(asymptotic_confidence(spec, iv),
                  optimal_confidence(s, iv.ratio()), 1e-13);
    }
  }
}

TEST(OptimalConfidenceTest, DependsOnlyOnProduct) {
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> mu(1.05, 4.0);
  std::uniform_real_distribution<double> scale(0.6, 1.6);
  for (int i = 0; i < 50; ++i) {
    const double mu1 = mu(gen);
    const double mu2 = mu(gen);
    const double a = scale(gen);
    if (a * mu1 <= 1.0 || mu2 / a <= 1.0) continue;
    const Shape r(3 + i);
    const RelativeInterval base(mu1, mu2);
    const RelativeInterval moved(a * mu1, mu2 / a);
    const double c0 = optimal_confidence(r, base.ratio());
    const double c1 = optimal_confidence(r, moved.ratio());
    if (base.ratio() == moved.ratio()) {
      EXPECT_EQ(c0, c1);
    } else {
      EXPECT_NEAR(c0, c1, 1e-12 * c0);
    }
    // The asymptotic confidence at each interval's own omega* agrees too.
    const EstimatorSpec s0(r, optimal_omega(r, base), 1.0);
    const EstimatorSpec s1(r, optimal_omega(r, moved), 1.0);
    EXPECT_NEAR(asymptotic_confidence(s0, base),
                asymptotic_confidence(s1, moved), 1e-12);
  }
}

TEST(OptimalConfidenceTest, OmegaStarIsGridArgmax) {
  for (const RelativeInterval iv :
       {RelativeInterval(1.5, 1.5), RelativeInterval(1.3, 2.2),
        RelativeInterval(2.0, 2.0)}) {
    for (int r : {3, 10, 30}) {
      const Shape s(r);
      const double star = optimal_omega(s, iv);
      const double best = asymptotic_confidence(EstimatorSpec(s, star, 0), iv);
      for (double f = 0.5; f <= 2.0; f += 0.001) {
        const double c = asymptotic_confidence(EstimatorSpec(s, f * star, 0), iv);
        ASSERT_GE(best - c, -1e-15) << "factor " << f;
      }
    }
  }
}

TEST(OptimalConfidenceTest, NondecreasingInRatioAndShape) {
  for (int r : {3, 5, 10, 40, 100}) {
    double prev = 0.0;
    for (double m = 1.1; m <= 50.0; m *= 1.02) {
      const double c = optimal_confidence(Shape(r), m);
      ASSERT_GE(c, prev - 1e-15) << "r=" << r << " M=" << m;
      prev = c;
    }
  }
  for (double m : {1.1, 1.5, 2.25, 4.0, 20.0}) {
    double prev = 0.0;
    for (int r = 3; r <= 100; ++r) {
      const double c = optimal_confidence(Shape(r), m);
      ASSERT_GE(c, prev - 1e-15) << "r=" << r << " M=" << m;
      prev = c;
    }
  }
}

TEST(PointEstimateTest, Values) {
  EXPECT_DOUBLE_EQ(point_estimate(EstimatorSpec(Shape(3), 9.0, 0.0), 90), 0.1);
  EXPECT_DOUBLE_EQ(point_estimate(EstimatorSpec(Shape(3), 2.0, 1.0), 3), 0.5);
  const EstimatorSpec opt(Shape(3), optimal_omega(Shape(3), kTwo), 1.0);
  EXPECT_NEAR(point_estimate(opt, 10), 0.2520535, 1e-7);
  EXPECT_THROW(point_estimate(opt, 2), DomainError);
}

TEST(IntervalEstimateTest, OptimalEstimatorMatchesClosedForm) {
  const Shape r(3);
  const EstimatorSpec opt(r, optimal_omega(r, kTwo), 1.0);
  const IntervalEstimate e = interval_estimate(opt, kTwo, 10);
  EXPECT_NEAR(e.lower, 0.1260268, 1e-7);
  EXPECT_NEAR(e.upper, 0.5041070, 1e-7);
  EXPECT_NEAR(e.upper / e.lower, 4.0, 1e-15);
  const IntervalCoefficients k = optimal_interval_coefficients(r, 4.0);
  EXPECT_NEAR(e.lower, k.lower / 11.0, 1e-15);
  EXPECT_NEAR(e.upper, k.upper / 11.0, 1e-15);
  EXPECT_THROW(interval_estimate(opt, kTwo, 1), DomainError);
}

// p/mu2 <= p_hat <= p mu1 exactly when p_hat/mu1 <= p <= p_hat mu2.
TEST(IntervalEstimateTest, CoverageEquivalence) {
  const RelativeInterval iv(1.4, 2.1);
  const EstimatorSpec spec(Shape(4), 3.7, 1.0);
  for (int n = 4; n < 300; ++n) {
    const IntervalEstimate e = interval_estimate(spec, iv, n);
    for (double p = 0.001; p < 1.0; p *= 1.07) {
      const bool window = iv.Contains(point_estimate(spec, n), p);
      const bool covers = e.lower <= p && p <= e.upper;
      // Both sides are one rounding apart; only exact ties may differ.
      if (window != covers) {
        EXPECT_LT(std::min(std::abs(p - e.lower), std::abs(p - e.upper)),
                  1e-14 * p);
      }
    }
  }
}

}  // namespace
}  // namespace ibs

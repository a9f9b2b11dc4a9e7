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


#ifndef IBS_MONTECARLO_H_
#define IBS_MONTECARLO_H_

#include <cstdint>
#include <random>

#include "ibs/model.h"
#include "ibs/specfun.h"

namespace ibs {

inline constexpr double kZ95 = 1.959963984540054;
inline constexpr double kZ999 = 3.2905267314918945;

// Deterministic uniform stream. Stream `index` of a given seed is seeded
// through std::seed_seq, so substreams for different indices are disjoint
// in practice and reproducible across platforms.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t index = 0);

  // Uniform on the open interval (0, 1).
  double Uniform();

 private:
  std::mt19937_64 engine_;
};

// Trial count needed to see r successes: a sum of r geometric(p) variates,
// each drawn by inverse transform ceil(log U / log(1 - p)).
std::int64_t sample_stopping_time(Shape r, double p, RandomStream& rng);

struct WilsonInterval {
  double low;
  double high;
};

// Wilson score interval for a binomial proportion at normal quantile z.
WilsonInterval wilson_interval(std::int64_t hits, std::int64_t reps, double z);

struct SimulationReport {
  std::int64_t reps;
  std::int64_t hits;
  double coverage;
  double wilson_low;   // 95 %
  double wilson_high;  // 95 %
  double mean_stopping_time;
  std::uint64_t seed;

  friend bool operator==(const SimulationReport&,
                         const SimulationReport&) = default;
};

// Replicates are split into a fixed number of substreams, so the report is
// bit-identical for a given seed regardless of how many threads run.
inline constexpr int kSubstreams = 64;

SimulationReport coverage_experiment(const EstimatorSpec& spec,
                                     const RelativeInterval& iv, double p,
                                     std::int64_t reps, std::uint64_t seed);

}  // namespace ibs

#endif  // IBS_MONTECARLO_H_

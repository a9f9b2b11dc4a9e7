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


#include "ibs/montecarlo.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ibs/errors.h"
#include "parallel.h"

namespace ibs {
namespace {

std::mt19937_64 MakeEngine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

struct ChunkTally {
  std::int64_t hits = 0;
  double stopping_time_sum = 0.0;
};

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t index)
    : engine_(MakeEngine(seed, index)) {}

double RandomStream::Uniform() {
  // 53 random bits, shifted half a step off zero.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53;
}

std::int64_t sample_stopping_time(Shape r, double p, RandomStream& rng) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("sample_stopping_time: p must lie in (0,1)");
  }
  const double log_q = std::log1p(-p);
  std::int64_t n = 0;
  for (int k = 0; k < r.value(); ++k) {
    const double g = std::ceil(std::log(rng.Uniform()) / log_q);
    n += g < 1.0 ? 1 : static_cast<std::int64_t>(g);
  }
  return n;
}

WilsonInterval wilson_interval(std::int64_t hits, std::int64_t reps, double z) {
  if (reps < 1 || hits < 0 || hits > reps) {
    throw DomainError("wilson_interval: need 0 <= hits <= reps, reps >= 1");
  }
  const double n = static_cast<double>(reps);
  const double phat = hits / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  // The exact end points are 0 and 1 at the extremes; keep rounding from
  // pushing the proportion outside its own interval.
  return {hits == 0 ? 0.0 : std::min(phat, center - half),
          hits == reps ? 1.0 : std::max(phat, center + half)};
}

SimulationReport coverage_experiment(const EstimatorSpec& spec,
                                     const RelativeInterval& iv, double p,
                                     std::int64_t reps, std::uint64_t seed) {
  if (reps < 1) throw DomainError("coverage_experiment: reps must be >= 1");
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("coverage_experiment: p must lie in (0,1)");
  }
  std::vector<ChunkTally> tallies(kSubstreams);
  internal::ParallelChunks(
      static_cast<std::size_t>(reps), kSubstreams,
      [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        RandomStream rng(seed, chunk);
        ChunkTally tally;
        for (std::size_t i = begin; i < end; ++i) {
          const std::int64_t n = sample_stopping_time(spec.r, p, rng);
          if (iv.Contains(point_estimate(spec, n), p)) ++tally.hits;
          tally.stopping_time_sum += static_cast<double>(n);
        }
        tallies[chunk] = tally;
      });

  ChunkTally total;
  for (const ChunkTally& t : tallies) {
    total.hits += t.hits;
    total.stopping_time_sum += t.stopping_time_sum;
  }
  const WilsonInterval w = wilson_interval(total.hits, reps, kZ95);
  return SimulationReport{reps,
                          total.hits,
                          static_cast<double>(total.hits) / reps,
                          w.low,
                          w.high,
                          total.stopping_time_sum / reps,
                          seed};
}

}  // namespace ibs

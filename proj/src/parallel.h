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


#ifndef IBS_SRC_PARALLEL_H_
#define IBS_SRC_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <utility>
#include <vector>

namespace ibs::internal {

inline std::size_t DefaultWorkers() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(chunk, begin, end) over `chunks` contiguous slices of [0, size)
// on up to DefaultWorkers() threads. Chunk boundaries depend only on size and
// chunks, never on the thread count.
template <typename Body>
void ParallelChunks(std::size_t size, std::size_t chunks, Body body) {
  if (size == 0) return;
  chunks = std::max<std::size_t>(1, std::min(chunks, size));
  const std::size_t base = size / chunks;
  const std::size_t extra = size % chunks;
  auto bounds = [&](std::size_t c) {
    const std::size_t begin = c * base + std::min(c, extra);
    return std::pair{begin, begin + base + (c < extra ? 1 : 0)};
  };
  const std::size_t workers = std::min(chunks, DefaultWorkers());
  if (workers == 1) {
    for (std::size_t c = 0; c < chunks; ++c) {
      const auto [begin, end] = bounds(c);
      body(c, begin, end);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t c = next++; c < chunks; c = next++) {
        const auto [begin, end] = bounds(c);
        body(c, begin, end);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ibs::internal

#endif  // IBS_SRC_PARALLEL_H_

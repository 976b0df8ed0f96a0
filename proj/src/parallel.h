// Copyright 2026 The trispar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRISPAR_PARALLEL_H_
#define TRISPAR_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace trispar {

// Resolves a requested worker count: 0 means available parallelism.
inline int ResolveThreads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(worker, begin, end) over [0, count) in dynamically claimed chunks.
// Workers are numbered 0..threads-1; callers keep per-worker state indexed by
// worker and merge it afterwards.
template <typename Fn>
void ParallelChunks(std::size_t count, int threads, std::size_t chunk, Fn&& fn) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(
                                                   (count + chunk - 1) / std::max<std::size_t>(chunk, 1))));
  if (threads <= 1) {
    if (count > 0) fn(0, std::size_t{0}, count);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&](int id) {
    while (true) {
      const std::size_t begin = next.fetch_add(chunk);
      if (begin >= count) break;
      fn(id, begin, std::min(count, begin + chunk));
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads - 1);
  for (int id = 1; id < threads; ++id) pool.emplace_back(worker, id);
  worker(0);
}

}  // namespace trispar

#endif  // TRISPAR_PARALLEL_H_
